// Copyright 2026 The orbiforest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// orbiforest <subcommand> --config path [--key=value ...] [--seed N] [--out dir] [--workers N]

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbiforest/orbiforest.h"

namespace {

const std::vector<std::string> kSubcommands = {"ball", "percolate", "phase-scan", "wilson", "msf", "pipeline",
                                               "blocks", "ends", "cost", "indist", "selftest"};

int report_error(orbi_status status, const std::string& message) {
  const nlohmann::json doc = {
      {"error", {{"status", orbi_status_name(status)}, {"code", static_cast<int>(status)}, {"message", message}}}};
  std::fprintf(stderr, "%s\n", doc.dump().c_str());
  return static_cast<int>(status);
}

int report_error(orbi_status status) { return report_error(status, orbi_last_error()); }

// Leftover "--a.b=value" or "--a.b value" arguments become config overrides.
bool collect_overrides(const std::vector<std::string>& extras, std::vector<std::pair<std::string, std::string>>& out,
                       std::string& problem) {
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const std::string& arg = extras[i];
    if (arg.rfind("--", 0) != 0 || arg.size() == 2) {
      problem = "unexpected argument '" + arg + "'";
      return false;
    }
    const std::string body = arg.substr(2);
    const auto eq = body.find('=');
    if (eq != std::string::npos) {
      out.emplace_back(body.substr(0, eq), body.substr(eq + 1));
    } else if (i + 1 < extras.size()) {
      out.emplace_back(body, extras[++i]);
    } else {
      problem = "override '" + arg + "' has no value";
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbiforest: percolation, spanning forests and cost estimates on Cayley balls"};
  app.allow_extras();
  app.set_version_flag("--version", orbi_version());

  std::string subcommand, config_path, out_dir, seed;
  int workers = -1;
  app.add_option("subcommand", subcommand, "one of: ball percolate phase-scan wilson msf pipeline blocks ends cost indist selftest")
      ->required()
      ->check(CLI::IsMember(kSubcommands));
  app.add_option("--config", config_path, "experiment config (JSON)");
  app.add_option("--seed", seed, "master seed, overrides the config");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--workers", workers, "worker threads (0: all cores)")->check(CLI::Range(0, 1024));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error(ORBI_CONFIG, e.what());
  }

  std::vector<std::pair<std::string, std::string>> overrides;
  std::string problem;
  if (!collect_overrides(app.remaining(), overrides, problem)) return report_error(ORBI_CONFIG, problem);
  if (config_path.empty() && subcommand != "selftest") return report_error(ORBI_CONFIG, "--config is required");

  orbi_lab* lab = nullptr;
  orbi_status status = config_path.empty() ? orbi_lab_create("{}", &lab) : orbi_lab_load(config_path.c_str(), &lab);
  if (status != ORBI_OK) return report_error(status);

  auto apply = [&](const std::string& key, const std::string& value) {
    status = orbi_lab_override(lab, key.c_str(), value.c_str());
    return status == ORBI_OK;
  };
  bool ok = true;
  for (const auto& [key, value] : overrides) ok = ok && apply(key, value);
  if (ok && !seed.empty()) ok = apply("seed", seed);
  if (ok && workers >= 0) ok = apply("workers", std::to_string(workers));
  if (!ok) {
    const int code = report_error(status);
    orbi_lab_destroy(lab);
    return code;
  }

  char* summary = nullptr;
  status = orbi_lab_run(lab, subcommand.c_str(), out_dir.c_str(), &summary);
  if (summary) {
    std::printf("%s\n", summary);
    orbi_string_free(summary);
  }
  const int code = status == ORBI_OK ? 0 : report_error(status);
  orbi_lab_destroy(lab);
  return code;
}
