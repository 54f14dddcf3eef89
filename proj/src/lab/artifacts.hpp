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

#ifndef ORBIFOREST_LAB_ARTIFACTS_HPP
#define ORBIFOREST_LAB_ARTIFACTS_HPP

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "group/cayley.hpp"
#include "lab/config.hpp"
#include "percolation/percolation.hpp"

namespace orbi::lab {

// Output directory and provenance shared by every file of one run.
class ArtifactSink {
 public:
  ArtifactSink(std::filesystem::path dir, const ExperimentConfig& config, std::string subcommand);

  const std::filesystem::path& dir() const { return dir_; }
  const std::vector<std::string>& written() const { return written_; }

  void write_json(const std::string& name, const nlohmann::json& doc);
  void write_text(const std::string& name, const std::string& text);

  // Provenance block embedded in sidecars and reports.
  nlohmann::json provenance() const;

 private:
  friend class CsvFile;
  std::filesystem::path open_path(const std::string& name);

  std::filesystem::path dir_;
  const ExperimentConfig& config_;
  std::string subcommand_;
  std::vector<std::string> written_;
};

// CSV with a header row; closing it writes `<name>.meta.json` beside it.
class CsvFile {
 public:
  CsvFile(ArtifactSink& sink, const std::string& name, std::vector<std::string> columns);
  ~CsvFile();
  CsvFile(const CsvFile&) = delete;
  CsvFile& operator=(const CsvFile&) = delete;

  template <typename... Cells>
  void row(const Cells&... cells) {
    std::vector<std::string> out;
    (out.push_back(cell(cells)), ...);
    write_row(out);
  }

  void close();

 private:
  static std::string cell(const std::string& s);
  static std::string cell(const char* s) { return cell(std::string(s)); }
  static std::string cell(double x);
  static std::string cell(bool b) { return b ? "1" : "0"; }
  template <typename Int>
    requires std::is_integral_v<Int>
  static std::string cell(Int x) { return std::to_string(x); }

  void write_row(const std::vector<std::string>& cells);

  ArtifactSink& sink_;
  std::string name_;
  std::vector<std::string> columns_;
  std::ofstream out_;
  std::size_t rows_ = 0;
  bool closed_ = false;
};

struct SvgLayer {
  std::string name;
  const BondConfig* edges;
  std::string color;
  double width;
};

// Radial drawing of a small ball, one path group per layer.
std::string render_ball_svg(const CayleyBall& ball, const std::vector<SvgLayer>& layers);

// Stable versions of every estimator definition, recorded in sidecars.
nlohmann::json estimator_versions();

}  // namespace orbi::lab

#endif  // ORBIFOREST_LAB_ARTIFACTS_HPP
