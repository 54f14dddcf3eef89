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

#include "lab/artifacts.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "common/error.hpp"
#include "common/version.hpp"

namespace orbi::lab {

namespace fs = std::filesystem;

nlohmann::json estimator_versions() {
  return {
      {"seed_derivation", "splitmix64-fnv1a/1"},
      {"labels", "counter-uniform/1"},
      {"theta_hat", "origin-meets-sphere/1"},
      {"u_hat", "reference-pair-conditioned/1"},
      {"nbig_hat", "boundary-clusters-log2v/1"},
      {"treeing_cost", "half-origin-degree/1"},
      {"indist", "ks-common-resample/1"},
      {"ends", "ambient-ball-removal/1"},
  };
}

ArtifactSink::ArtifactSink(fs::path dir, const ExperimentConfig& config, std::string subcommand)
    : dir_(std::move(dir)), config_(config), subcommand_(std::move(subcommand)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) fail(ErrorCode::kIo, fmt::format("cannot create output directory '{}': {}", dir_.string(), ec.message()));
}

nlohmann::json ArtifactSink::provenance() const {
  return {
      {"subcommand", subcommand_},
      {"config_hash", config_.hash()},
      {"seed", config_.seed},
      {"version", kVersion},
      {"estimators", estimator_versions()},
  };
}

fs::path ArtifactSink::open_path(const std::string& name) {
  written_.push_back(name);
  return dir_ / name;
}

void ArtifactSink::write_text(const std::string& name, const std::string& text) {
  const fs::path path = open_path(name);
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kIo, fmt::format("cannot write '{}'", path.string()));
  out << text;
  if (!out) fail(ErrorCode::kIo, fmt::format("write failed for '{}'", path.string()));
}

void ArtifactSink::write_json(const std::string& name, const nlohmann::json& doc) {
  write_text(name, doc.dump(2) + "\n");
}

CsvFile::CsvFile(ArtifactSink& sink, const std::string& name, std::vector<std::string> columns)
    : sink_(sink), name_(name), columns_(std::move(columns)) {
  const fs::path path = sink_.open_path(name_);
  out_.open(path, std::ios::binary);
  if (!out_) fail(ErrorCode::kIo, fmt::format("cannot write '{}'", path.string()));
  write_row(columns_);
  rows_ = 0;
}

CsvFile::~CsvFile() {
  try {
    close();
  } catch (...) {
  }
}

void CsvFile::close() {
  if (closed_) return;
  closed_ = true;
  out_.close();
  nlohmann::json meta = {{"provenance", sink_.provenance()}};
  meta["file"] = name_;
  meta["columns"] = columns_;
  meta["rows"] = rows_;
  meta["config"] = sink_.config_.canonical();
  sink_.write_json(name_ + ".meta.json", meta);
}

std::string CsvFile::cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string CsvFile::cell(double x) {
  if (std::isnan(x)) return "nan";
  return fmt::format("{}", x);
}

void CsvFile::write_row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
  ++rows_;
}

std::string render_ball_svg(const CayleyBall& ball, const std::vector<SvgLayer>& layers) {
  const Graph& g = ball.graph();
  const std::size_t n = g.vertex_count();

  // BFS tree by vertex order: the parent is the first neighbour one step closer.
  std::vector<VertexId> parent(n, kNone);
  for (VertexId v = 1; v < n; ++v) {
    for (EdgeId e : g.incident_edges(v)) {
      const VertexId w = g.other(e, v);
      if (ball.word_length(w) + 1 == ball.word_length(v) && (parent[v] == kNone || w < parent[v])) parent[v] = w;
    }
  }
  std::vector<double> leaves(n, 0.0);
  for (VertexId v = static_cast<VertexId>(n); v-- > 0;) {
    if (leaves[v] == 0.0) leaves[v] = 1.0;
    if (parent[v] != kNone) leaves[parent[v]] += leaves[v];
  }
  // Children split their parent's angular interval by leaf count.
  std::vector<double> lo(n, 0.0), span(n, 2.0 * std::numbers::pi), cursor(n, 0.0);
  for (VertexId v = 1; v < n; ++v) {
    const VertexId p = parent[v];
    span[v] = span[p] * leaves[v] / leaves[p];
    lo[v] = lo[p] + cursor[p];
    cursor[p] += span[v];
  }
  const double size = 640.0, centre = size / 2.0;
  const double step = (centre - 24.0) / std::max(1, ball.radius());
  auto x = [&](VertexId v) { return centre + step * ball.word_length(v) * std::cos(lo[v] + span[v] / 2.0); };
  auto y = [&](VertexId v) { return centre + step * ball.word_length(v) * std::sin(lo[v] + span[v] / 2.0); };

  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
      size);
  auto edge_group = [&](const std::string& name, const BondConfig* edges, const std::string& color, double width) {
    out += fmt::format("<g id=\"{}\" stroke=\"{}\" stroke-width=\"{}\" fill=\"none\">\n", name, color, width);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (edges && !edges->contains(e)) continue;
      const Edge& ed = g.edge(e);
      out += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n", x(ed.tail), y(ed.tail),
                         x(ed.head), y(ed.head));
    }
    out += "</g>\n";
  };
  edge_group("ball", nullptr, "#d0d0d0", 0.8);
  for (const SvgLayer& layer : layers) edge_group(layer.name, layer.edges, layer.color, layer.width);
  out += "<g id=\"vertices\">\n";
  for (VertexId v = 0; v < n; ++v) {
    out += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"{}\" fill=\"{}\"><title>{}</title></circle>\n", x(v),
                       y(v), v == 0 ? 4 : 2.5, g.is_boundary(v) ? "#555555" : "#222222",
                       v == 0 ? std::string("o") : ball.vertex_label(v));
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace orbi::lab
