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

#include "orbiforest/orbiforest.h"

#include <cstring>
#include <string>

#include <fmt/format.h>
#include <json.hpp>

#include "common/error.hpp"
#include "common/version.hpp"
#include "forest/msf.hpp"
#include "forest/wilson.hpp"
#include "group/cayley.hpp"
#include "lab/config.hpp"
#include "lab/lab.hpp"
#include "percolation/percolation.hpp"

struct orbi_ball {
  orbi::CayleyBall ball;
};

struct orbi_lab {
  nlohmann::json doc;
};

namespace {

thread_local std::string last_error;

orbi_status to_status(orbi::ErrorCode code) { return static_cast<orbi_status>(static_cast<int>(code)); }

template <typename Fn>
orbi_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return ORBI_OK;
  } catch (const orbi::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return ORBI_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ORBI_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) orbi::fail(orbi::ErrorCode::kInvalidArgument, what);
}

char* duplicate(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nlohmann::json parse_json(const char* text) {
  require(text != nullptr, "config text is null");
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    orbi::fail(orbi::ErrorCode::kConfig, fmt::format("config is not valid JSON: {}", e.what()));
  }
}

void require_vertex(const orbi_ball* ball, std::uint32_t v) {
  require(ball != nullptr, "ball is null");
  if (v >= ball->ball.vertex_count()) {
    orbi::fail(orbi::ErrorCode::kInvalidArgument, fmt::format("vertex {} out of range", v));
  }
}

orbi::BondConfig read_bonds(const orbi_ball* ball, const std::uint8_t* open) {
  require(open != nullptr, "bond array is null");
  const std::size_t m = ball->ball.graph().edge_count();
  orbi::BondConfig b = orbi::BondConfig::empty(m);
  for (std::size_t e = 0; e < m; ++e) b.open[e] = open[e] ? 1 : 0;
  return b;
}

void write_bonds(const orbi::BondConfig& b, std::uint8_t* out) {
  std::memcpy(out, b.open.data(), b.open.size());
}

}  // namespace

extern "C" {

const char* orbi_version(void) { return orbi::kVersion; }

const char* orbi_status_name(orbi_status status) {
  if (status == ORBI_OK) return "ok";
  return orbi::error_code_name(static_cast<orbi::ErrorCode>(status));
}

const char* orbi_last_error(void) { return last_error.c_str(); }

void orbi_string_free(char* s) { delete[] s; }

orbi_status orbi_ball_create(const char* config_json, orbi_ball** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = nullptr;
    const orbi::lab::ExperimentConfig c = orbi::lab::parse_config(parse_json(config_json));
    *out = new orbi_ball{orbi::CayleyBall::build(c.group, c.generators, c.radius, c.caps.vertex_cap)};
  });
}

void orbi_ball_destroy(orbi_ball* ball) { delete ball; }

size_t orbi_ball_vertex_count(const orbi_ball* ball) { return ball ? ball->ball.vertex_count() : 0; }
size_t orbi_ball_edge_count(const orbi_ball* ball) { return ball ? ball->ball.graph().edge_count() : 0; }
size_t orbi_ball_degree(const orbi_ball* ball) { return ball ? ball->ball.degree() : 0; }
int orbi_ball_radius(const orbi_ball* ball) { return ball ? ball->ball.radius() : -1; }

orbi_status orbi_ball_edge(const orbi_ball* ball, uint32_t edge, uint32_t* tail, uint32_t* head, uint32_t* generator) {
  return guarded([&] {
    require(ball != nullptr, "ball is null");
    if (edge >= ball->ball.graph().edge_count()) {
      orbi::fail(orbi::ErrorCode::kInvalidArgument, fmt::format("unknown edge id {}", edge));
    }
    const orbi::Edge& e = ball->ball.graph().edge(edge);
    if (tail) *tail = e.tail;
    if (head) *head = e.head;
    if (generator) *generator = e.generator;
  });
}

orbi_status orbi_ball_is_boundary(const orbi_ball* ball, uint32_t vertex, int* boundary) {
  return guarded([&] {
    require_vertex(ball, vertex);
    require(boundary != nullptr, "output pointer is null");
    *boundary = ball->ball.graph().is_boundary(vertex) ? 1 : 0;
  });
}

orbi_status orbi_ball_word_length(const orbi_ball* ball, uint32_t vertex, uint32_t* length) {
  return guarded([&] {
    require_vertex(ball, vertex);
    require(length != nullptr, "output pointer is null");
    *length = ball->ball.word_length(vertex);
  });
}

orbi_status orbi_ball_vertex_label(const orbi_ball* ball, uint32_t vertex, char** label) {
  return guarded([&] {
    require_vertex(ball, vertex);
    require(label != nullptr, "output pointer is null");
    *label = duplicate(ball->ball.vertex_label(vertex));
  });
}

orbi_status orbi_normalize(const orbi_ball* ball, const char* word, char** normal_form) {
  return guarded([&] {
    require(ball != nullptr && word != nullptr && normal_form != nullptr, "null argument");
    const orbi::Group& g = ball->ball.group();
    *normal_form = duplicate(g.format(g.normalize(word)));
  });
}

orbi_status orbi_left_translate(const orbi_ball* ball, const char* g, uint32_t vertex, uint32_t* image, int* inside) {
  return guarded([&] {
    require_vertex(ball, vertex);
    require(g != nullptr && image != nullptr && inside != nullptr, "null argument");
    const auto w = ball->ball.left_translate(ball->ball.group().normalize(g), vertex);
    *inside = w ? 1 : 0;
    *image = w ? *w : orbi::kNone;
  });
}

orbi_status orbi_sample_labels(const orbi_ball* ball, uint64_t seed, double* labels) {
  return guarded([&] {
    require(ball != nullptr && labels != nullptr, "null argument");
    const orbi::LabelConfig u = orbi::sample_labels(ball->ball.graph(), seed);
    std::memcpy(labels, u.u.data(), u.u.size() * sizeof(double));
  });
}

orbi_status orbi_sample_bonds(const orbi_ball* ball, double p, uint64_t seed, uint8_t* open) {
  return guarded([&] {
    require(ball != nullptr && open != nullptr, "null argument");
    write_bonds(orbi::sample_bonds(ball->ball.graph(), p, seed), open);
  });
}

orbi_status orbi_clusters(const orbi_ball* ball, const uint8_t* open, uint32_t* cluster_of, size_t* cluster_count) {
  return guarded([&] {
    require(ball != nullptr && cluster_of != nullptr, "null argument");
    const auto dec = orbi::decompose_clusters(ball->ball.graph(), read_bonds(ball, open));
    std::memcpy(cluster_of, dec.cluster_ids().data(), dec.cluster_ids().size() * sizeof(uint32_t));
    if (cluster_count) *cluster_count = dec.clusters().size();
  });
}

orbi_status orbi_wilson(const orbi_ball* ball, orbi_builder builder, uint64_t seed, uint8_t* forest, uint64_t* pops) {
  return guarded([&] {
    require(ball != nullptr && forest != nullptr, "null argument");
    const orbi::Graph& g = ball->ball.graph();
    orbi::ForestConfig f;
    if (builder == ORBI_BUILDER_STACKS) {
      f = orbi::wilson_stacks(g, orbi::StackOracle(seed));
    } else if (builder == ORBI_BUILDER_LERW) {
      f = orbi::wilson_wired(g, seed);
    } else {
      orbi::fail(orbi::ErrorCode::kInvalidArgument, "unknown forest builder");
    }
    write_bonds(f.edges, forest);
    if (pops) *pops = f.pops;
  });
}

orbi_status orbi_msf(const orbi_ball* ball, const uint8_t* open, const double* labels, uint8_t* forest) {
  return guarded([&] {
    require(ball != nullptr && labels != nullptr && forest != nullptr, "null argument");
    const orbi::Graph& g = ball->ball.graph();
    orbi::LabelConfig u;
    u.u.assign(labels, labels + g.edge_count());
    write_bonds(orbi::msf_cycle_deletion(g, read_bonds(ball, open), u).edges, forest);
  });
}

orbi_status orbi_lab_create(const char* config_json, orbi_lab** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = nullptr;
    nlohmann::json doc = parse_json(config_json);
    orbi::lab::parse_config(doc);
    *out = new orbi_lab{std::move(doc)};
  });
}

orbi_status orbi_lab_load(const char* path, orbi_lab** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    nlohmann::json doc = orbi::lab::read_config_file(path);
    orbi::lab::parse_config(doc);
    *out = new orbi_lab{std::move(doc)};
  });
}

void orbi_lab_destroy(orbi_lab* lab) { delete lab; }

orbi_status orbi_lab_override(orbi_lab* lab, const char* dotted_key, const char* value) {
  return guarded([&] {
    require(lab != nullptr && dotted_key != nullptr && value != nullptr, "null argument");
    nlohmann::json updated = lab->doc;
    orbi::lab::apply_override(updated, dotted_key, value);
    orbi::lab::parse_config(updated);
    lab->doc = std::move(updated);
  });
}

orbi_status orbi_lab_config(orbi_lab* lab, char** json) {
  return guarded([&] {
    require(lab != nullptr && json != nullptr, "null argument");
    *json = duplicate(orbi::lab::parse_config(lab->doc).canonical().dump(2));
  });
}

orbi_status orbi_lab_run(orbi_lab* lab, const char* subcommand, const char* out_dir, char** summary_json) {
  int exit_code = 0;
  const orbi_status status = guarded([&] {
    require(lab != nullptr && subcommand != nullptr, "null argument");
    if (summary_json) *summary_json = nullptr;
    const orbi::lab::ExperimentConfig c = orbi::lab::parse_config(lab->doc);
    const std::string dir = orbi::lab::resolve_output_dir(c, out_dir ? out_dir : "", subcommand);
    const orbi::lab::RunResult r = orbi::lab::run(subcommand, c, dir);
    exit_code = r.exit_code;
    if (summary_json) {
      const nlohmann::json doc = {{"subcommand", subcommand},
                                  {"output_dir", dir},
                                  {"artifacts", r.artifacts},
                                  {"status", exit_code == 0 ? "ok" : "check_failed"},
                                  {"summary", r.summary}};
      *summary_json = duplicate(doc.dump(2));
    }
  });
  if (status != ORBI_OK) return status;
  if (exit_code != 0) {
    last_error = fmt::format("{}: a check failed; see the summary", subcommand);
    return ORBI_CHECK_FAILED;
  }
  return ORBI_OK;
}

}  // extern "C"
