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

#include "lab/lab.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <map>

#include <fmt/format.h>

#include "common/error.hpp"
#include "common/parallel.hpp"
#include "common/rng.hpp"
#include "cost/cost.hpp"
#include "cost/indist.hpp"
#include "forest/pipeline.hpp"
#include "forest/structure.hpp"
#include "group/cayley.hpp"
#include "lab/artifacts.hpp"
#include "oracles/suites.hpp"
#include "percolation/phase_scan.hpp"

namespace orbi::lab {
namespace {

using nlohmann::json;

constexpr int kSvgMaxRadius = 4;

json optional_number(std::optional<double> x) { return x ? json(*x) : json(nullptr); }
json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

CayleyBall build_ball(const ExperimentConfig& c) {
  return CayleyBall::build(c.group, c.generators, c.radius, c.caps.vertex_cap);
}

std::string group_name(const CayleyBall& ball) { return ball.group().spec().describe(); }

json ball_json(const CayleyBall& ball) {
  json generators = json::array();
  for (const Generator& g : ball.generators()) generators.push_back(g.label);
  return {{"group", group_name(ball)},
          {"generators", generators},
          {"radius", ball.radius()},
          {"degree", ball.degree()},
          {"vertices", ball.vertex_count()},
          {"edges", ball.graph().edge_count()},
          {"boundary_vertices", ball.graph().boundary_vertices().size()}};
}

VertexId resolve_vertex(const CayleyBall& ball, const std::string& word) {
  const auto v = ball.find(ball.group().normalize(word));
  if (!v) fail(ErrorCode::kInvalidArgument, fmt::format("element '{}' lies outside the ball", word));
  return *v;
}

void write_forest_csv(ArtifactSink& sink, const CayleyBall& ball, const BondConfig* f1, const BondConfig* f2) {
  const Graph& g = ball.graph();
  CsvFile csv(sink, "forest.csv", {"edge_id", "tail", "head", "label", "in_F1", "in_F2"});
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    csv.row(e, ed.tail, ed.head, ball.generators()[ed.generator].label, f1 && f1->contains(e), f2 && f2->contains(e));
  }
}

std::uint32_t degree_in(const Graph& g, const BondConfig& edges, VertexId v) {
  std::uint32_t d = 0;
  for (EdgeId e : g.incident_edges(v)) d += edges.contains(e) ? 1 : 0;
  return d;
}

std::size_t component_count(const Graph& g, const BondConfig& edges) {
  return decompose_clusters(g, edges).clusters().size();
}

PipelineOptions pipeline_options(const ExperimentConfig& c, double epsilon) {
  PipelineOptions o;
  o.epsilon = epsilon;
  o.builder = c.forest.builder;
  o.pop_cap = c.caps.pop_cap;
  return o;
}

const char* builder_name(ForestBuilder b) { return b == ForestBuilder::kStacks ? "stacks" : "lerw"; }

struct PipelineRecord {
  std::size_t omega = 0, f1 = 0, pi = 0, f2 = 0;
  std::uint64_t pops = 0;
  PipelineChecks checks;
  bool origin_touches = false;
  std::uint32_t origin_degree_f2 = 0;
  std::size_t origin_cluster_size = 0;
  std::size_t blocks = 0, cutvertices = 0, max_block = 0;
  double median_block = 0.0;
  std::map<std::size_t, std::size_t> histogram;
  std::vector<std::uint32_t> ends;
};

struct RecordWants {
  bool blocks = false;
  bool ends = false;
};

PipelineRecord summarize(const CayleyBall& ball, const ExperimentConfig& c, const PipelineSample& s,
                         RecordWants wants) {
  const Graph& g = ball.graph();
  PipelineRecord r;
  r.omega = s.omega.count();
  r.f1 = s.f1.edges.count();
  r.pi = s.pi.count();
  r.f2 = s.f2.edges.count();
  r.pops = s.f1.pops;
  r.checks = s.checks;
  const auto dec = decompose_clusters(g, s.pi);
  const ClusterView origin = origin_cluster(g, s.pi, dec);
  r.origin_touches = origin.touches_boundary;
  r.origin_cluster_size = origin.vertices.size();
  r.origin_degree_f2 = degree_in(g, s.f2.edges, 0);
  if (wants.blocks) {
    const BlockReport b = blocks(g, s.pi);
    r.blocks = b.blocks.size();
    r.cutvertices = b.cutvertices.size();
    r.max_block = b.max_block_size;
    r.median_block = b.median_block_size;
    r.histogram = b.histogram;
  }
  if (wants.ends && origin.touches_boundary) {
    r.ends = ends_profile(g, s.pi, origin.vertices, 0, c.forest.ends_radii, static_cast<std::uint32_t>(ball.radius()))
                 .counts;
  }
  return r;
}

std::uint64_t pipeline_seed(const ExperimentConfig& c, std::size_t t) { return derive_seed(c.seed, "pipeline", {t}); }

std::vector<PipelineRecord> pipeline_records(const CayleyBall& ball, const ExperimentConfig& c, RecordWants wants) {
  const PipelineOptions options = pipeline_options(c, c.forest.epsilon);
  return run_trials<PipelineRecord>(c.trials, c.workers, [&](std::size_t t) {
    return summarize(ball, c, construct_f(ball.graph(), options, pipeline_seed(c, t)), wants);
  });
}

json checks_json(const PipelineChecks& k) {
  return {{"f2_acyclic", k.f2_acyclic},
          {"f2_inside_pi", k.f2_inside_pi},
          {"partitions_match", k.partitions_match},
          {"clusters_rooted", k.clusters_rooted}};
}

double median(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size();
  return m % 2 ? xs[m / 2] : 0.5 * (xs[m / 2 - 1] + xs[m / 2]);
}

// ---------------------------------------------------------------------------

RunResult run_ball(const ExperimentConfig& c, ArtifactSink& sink) {
  const CayleyBall ball = build_ball(c);
  const Graph& g = ball.graph();
  {
    CsvFile csv(sink, "ball_vertices.csv", {"vertex", "label", "length", "boundary"});
    for (VertexId v = 0; v < ball.vertex_count(); ++v) csv.row(v, ball.vertex_label(v), ball.word_length(v), g.is_boundary(v));
  }
  {
    CsvFile csv(sink, "ball_edges.csv", {"edge_id", "tail", "head", "label"});
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      csv.row(e, ed.tail, ed.head, ball.generators()[ed.generator].label);
    }
  }
  json sphere = json::array();
  for (VertexId v = 0; v < ball.vertex_count(); ++v) {
    const std::uint32_t len = ball.word_length(v);
    while (sphere.size() <= len) sphere.push_back(0);
    sphere[len] = sphere[len].get<std::size_t>() + 1;
  }
  std::size_t full_degree = 0;
  for (VertexId v = 0; v < ball.vertex_count(); ++v) {
    if (!g.is_boundary(v) && g.slots(v).size() == ball.degree() &&
        std::none_of(g.slots(v).begin(), g.slots(v).end(), [](EdgeId e) { return e == kNone; })) {
      ++full_degree;
    }
  }
  json report = ball_json(ball);
  report["sphere_sizes"] = sphere;
  report["interior_vertices_with_full_degree"] = full_degree;
  report["provenance"] = sink.provenance();
  sink.write_json("ball.json", report);
  if (ball.radius() <= kSvgMaxRadius) sink.write_text("ball.svg", render_ball_svg(ball, {}));
  return {report, {}, 0};
}

RunResult run_percolate(const ExperimentConfig& c, ArtifactSink& sink) {
  const CayleyBall ball = build_ball(c);
  const Graph& g = ball.graph();
  const BondConfig omega = sample_bonds(g, c.percolation.p, derive_seed(c.seed, "percolate"));
  const auto dec = decompose_clusters(g, omega);
  std::size_t touching = 0, largest = 0;
  {
    CsvFile csv(sink, "clusters.csv", {"cluster_id", "size", "open_edges", "touches_boundary"});
    for (const ClusterStats& s : dec.clusters()) {
      csv.row(s.id, s.size, s.open_edges, s.touches_boundary);
      touching += s.touches_boundary ? 1 : 0;
      largest = std::max<std::size_t>(largest, s.size);
    }
  }
  const ClusterView origin = origin_cluster(g, omega, dec);
  json report = ball_json(ball);
  report["p"] = c.percolation.p;
  report["open_edges"] = omega.count();
  report["clusters"] = dec.clusters().size();
  report["boundary_touching_clusters"] = touching;
  report["largest_cluster"] = largest;
  report["origin_cluster"] = {{"size", origin.vertices.size()},
                              {"open_edges", origin.open_edges.size()},
                              {"touches_boundary", origin.touches_boundary}};
  report["provenance"] = sink.provenance();
  sink.write_json("percolate.json", report);
  if (ball.radius() <= kSvgMaxRadius) {
    sink.write_text("percolate.svg", render_ball_svg(ball, {{"omega", &omega, "#1f5fbf", 2.0}}));
  }
  return {report, {}, 0};
}

RunResult run_phase_scan(const ExperimentConfig& c, ArtifactSink& sink) {
  PhaseScanOptions o;
  o.radii = c.radii.empty() ? std::vector<int>{c.radius} : c.radii;
  o.p_grid = c.percolation.p_grid.empty() ? default_p_grid() : c.percolation.p_grid;
  o.trials = c.trials;
  o.seed = c.seed;
  o.delta_c = c.percolation.delta_c;
  o.delta_u = c.percolation.delta_u;
  o.workers = c.workers;
  o.vertex_cap = c.caps.vertex_cap;
  const PhaseScanResult result = phase_scan(c.group, c.generators, o);
  const std::string group = c.group.describe();
  {
    CsvFile csv(sink, "phase_scan.csv", {"group", "R", "p", "trials", "theta_hat", "u_hat", "nbig_hat", "se_theta"});
    for (const PhaseScanRow& r : result.rows) {
      csv.row(group, r.radius, r.p, r.trials, r.theta_hat, r.u_hat, r.nbig_hat, r.se_theta);
    }
  }
  json radii = json::array();
  for (const PhaseScanRadius& s : result.summary) {
    radii.push_back({{"R", s.radius},
                     {"vertices", s.vertex_count},
                     {"references", {{"a", s.references.a}, {"b", s.references.b}, {"distance", s.references.distance}}},
                     {"p_c_hat", optional_number(s.p_c_hat)},
                     {"p_u_hat", optional_number(s.p_u_hat)}});
  }
  json report = {{"group", group},
                 {"trials", c.trials},
                 {"delta_c", c.percolation.delta_c},
                 {"delta_u", c.percolation.delta_u},
                 {"grid_points", o.p_grid.size()},
                 {"radii", radii},
                 {"provenance", sink.provenance()}};
  sink.write_json("phase_scan.json", report);
  return {report, {}, 0};
}

RunResult run_wilson(const ExperimentConfig& c, ArtifactSink& sink) {
  const CayleyBall ball = build_ball(c);
  const Graph& g = ball.graph();
  const std::uint64_t seed = derive_seed(c.seed, "wilson");
  const ForestConfig f1 = c.forest.builder == ForestBuilder::kStacks
                              ? wilson_stacks(g, StackOracle(seed), c.caps.pop_cap)
                              : wilson_wired(g, seed);
  write_forest_csv(sink, ball, &f1.edges, nullptr);
  json report = ball_json(ball);
  report["builder"] = builder_name(c.forest.builder);
  report["forest_edges"] = f1.edges.count();
  report["roots"] = f1.roots.size();
  report["components"] = component_count(g, f1.edges);
  report["acyclic"] = is_acyclic(g, f1.edges);
  report["pops"] = f1.pops;
  report["origin_degree"] = degree_in(g, f1.edges, 0);
  report["provenance"] = sink.provenance();
  sink.write_json("wilson.json", report);
  if (ball.radius() <= kSvgMaxRadius) {
    sink.write_text("wilson.svg", render_ball_svg(ball, {{"F1", &f1.edges, "#2e8b57", 2.0}}));
  }
  return {report, {}, 0};
}

RunResult run_msf(const ExperimentConfig& c, ArtifactSink& sink) {
  const CayleyBall ball = build_ball(c);
  const Graph& g = ball.graph();
  const BondConfig omega = sample_bonds(g, c.percolation.p, derive_seed(c.seed, "msf-omega"));
  const LabelConfig labels = sample_labels(g, derive_seed(c.seed, "msf-labels"));
  const ForestConfig f2 = msf_cycle_deletion(g, omega, labels);
  write_forest_csv(sink, ball, nullptr, &f2.edges);
  const PipelineChecks checks = check_pipeline(g, omega, f2.edges);
  json report = ball_json(ball);
  report["p"] = c.percolation.p;
  report["subgraph_edges"] = omega.count();
  report["forest_edges"] = f2.edges.count();
  report["components"] = component_count(g, f2.edges);
  report["acyclic"] = checks.f2_acyclic;
  report["spans_every_component"] = checks.partitions_match && checks.f2_inside_pi;
  report["provenance"] = sink.provenance();
  sink.write_json("msf.json", report);
  if (ball.radius() <= kSvgMaxRadius) {
    sink.write_text("msf.svg", render_ball_svg(ball, {{"omega", &omega, "#1f5fbf", 1.5}, {"F2", &f2.edges, "#c0392b", 2.5}}));
  }
  const bool ok = checks.f2_acyclic && checks.f2_inside_pi && checks.partitions_match;
  return {report, {}, ok ? 0 : static_cast<int>(ErrorCode::kCheckFailed)};
}

RunResult run_pipeline(const ExperimentConfig& c, ArtifactSink& sink) {
  const CayleyBall ball = build_ball(c);
  const auto records = pipeline_records(ball, c, {});
  std::size_t passed = 0, touching = 0;
  std::vector<std::size_t> failures;
  std::vector<double> degrees;
  {
    CsvFile csv(sink, "pipeline.csv",
                {"sample", "omega_edges", "f1_edges", "pi_edges", "f2_edges", "pops", "f2_acyclic", "f2_inside_pi",
                 "partitions_match", "clusters_rooted", "origin_touches_boundary", "origin_degree_f2"});
    for (std::size_t t = 0; t < records.size(); ++t) {
      const PipelineRecord& r = records[t];
      csv.row(t, r.omega, r.f1, r.pi, r.f2, r.pops, r.checks.f2_acyclic, r.checks.f2_inside_pi, r.checks.partitions_match,
              r.checks.clusters_rooted, r.origin_touches, r.origin_degree_f2);
      if (r.checks.ok()) {
        ++passed;
      } else {
        failures.push_back(t);
      }
      if (r.origin_touches) {
        ++touching;
        degrees.push_back(r.origin_degree_f2);
      }
    }
  }
  // The first sample is exported edge by edge.
  const PipelineSample first = construct_f(ball.graph(), pipeline_options(c, c.forest.epsilon), pipeline_seed(c, 0));
  write_forest_csv(sink, ball, &first.f1.edges, &first.f2.edges);
  if (ball.radius() <= kSvgMaxRadius) {
    sink.write_text("pipeline.svg", render_ball_svg(ball, {{"omega", &first.omega, "#1f5fbf", 1.5},
                                                          {"F1", &first.f1.edges, "#2e8b57", 2.0},
                                                          {"F2", &first.f2.edges, "#c0392b", 1.0}}));
  }
  const Estimate deg = estimate_mean(degrees);
  json report = ball_json(ball);
  report["epsilon"] = c.forest.epsilon;
  report["builder"] = builder_name(c.forest.builder);
  report["samples"] = records.size();
  report["passed"] = passed;
  report["failed_samples"] = failures;
  report["origin_boundary_touching"] = touching;
  report["origin_degree_f2"] = {{"mean", deg.mean}, {"std_error", deg.std_error}};
  report["first_sample_checks"] = checks_json(first.checks);
  report["provenance"] = sink.provenance();
  sink.write_json("pipeline.json", report);
  return {report, {}, failures.empty() ? 0 : static_cast<int>(ErrorCode::kCheckFailed)};
}

RunResult run_blocks(const ExperimentConfig& c, ArtifactSink& sink) {
  const CayleyBall ball = build_ball(c);
  const auto records = pipeline_records(ball, c, {.blocks = true});
  std::map<std::size_t, std::size_t> histogram;
  std::size_t max_block = 0;
  std::vector<double> medians;
  {
    CsvFile csv(sink, "blocks.csv", {"sample", "blocks", "cutvertices", "max_block_size", "median_block_size"});
    for (std::size_t t = 0; t < records.size(); ++t) {
      const PipelineRecord& r = records[t];
      csv.row(t, r.blocks, r.cutvertices, r.max_block, r.median_block);
      for (const auto& [size, count] : r.histogram) histogram[size] += count;
      max_block = std::max(max_block, r.max_block);
      medians.push_back(r.median_block);
    }
  }
  json hist = json::object();
  for (const auto& [size, count] : histogram) hist[std::to_string(size)] = count;

  // Path counts are taken in pi of the first sample.
  json paths = json::array();
  if (!c.paths.empty()) {
    const PipelineSample first = construct_f(ball.graph(), pipeline_options(c, c.forest.epsilon), pipeline_seed(c, 0));
    for (const PathQuery& q : c.paths) {
      const VertexId a = resolve_vertex(ball, q.from), b = resolve_vertex(ball, q.to);
      const PathCount pc = count_simple_paths(ball.graph(), first.pi, a, b, q.max_len, c.caps.path_cap);
      paths.push_back({{"from", q.from}, {"to", q.to}, {"max_len", q.max_len}, {"count", pc.count}, {"saturated", pc.saturated}});
    }
  }
  json report = ball_json(ball);
  report["epsilon"] = c.forest.epsilon;
  report["samples"] = records.size();
  report["histogram"] = hist;
  report["max_block_size"] = max_block;
  report["median_of_median_block_size"] = median(medians);
  report["max_median_block_size"] = medians.empty() ? 0.0 : *std::max_element(medians.begin(), medians.end());
  report["paths"] = paths;
  report["provenance"] = sink.provenance();
  sink.write_json("blocks.json", report);
  return {report, {}, 0};
}

RunResult run_ends(const ExperimentConfig& c, ArtifactSink& sink) {
  const CayleyBall ball = build_ball(c);
  for (std::uint32_t r : c.forest.ends_radii) {
    if (r >= static_cast<std::uint32_t>(ball.radius())) {
      fail(ErrorCode::kInvalidArgument, fmt::format("ends radius {} must be < R = {}", r, ball.radius()));
    }
  }
  const auto records = pipeline_records(ball, c, {.ends = true});
  const std::size_t k = c.forest.ends_radii.size();
  std::vector<double> sum(k, 0.0);
  std::vector<std::size_t> at_least3(k, 0);
  std::size_t conditioned = 0;
  {
    CsvFile csv(sink, "ends.csv", {"sample", "r", "count"});
    for (std::size_t t = 0; t < records.size(); ++t) {
      const PipelineRecord& rec = records[t];
      if (!rec.origin_touches) continue;
      ++conditioned;
      for (std::size_t i = 0; i < k; ++i) {
        csv.row(t, c.forest.ends_radii[i], rec.ends[i]);
        sum[i] += rec.ends[i];
        at_least3[i] += rec.ends[i] >= 3 ? 1 : 0;
      }
    }
  }
  json profile = json::array();
  for (std::size_t i = 0; i < k; ++i) {
    const double denom = conditioned ? static_cast<double>(conditioned) : 1.0;
    profile.push_back({{"r", c.forest.ends_radii[i]},
                       {"mean_count", sum[i] / denom},
                       {"fraction_at_least_3", static_cast<double>(at_least3[i]) / denom}});
  }
  json report = ball_json(ball);
  report["epsilon"] = c.forest.epsilon;
  report["samples"] = records.size();
  report["origin_boundary_touching"] = conditioned;
  report["profile"] = profile;
  report["provenance"] = sink.provenance();
  sink.write_json("ends.json", report);
  return {report, {}, 0};
}

RunResult run_cost(const ExperimentConfig& c, ArtifactSink& sink) {
  const CayleyBall ball = build_ball(c);
  const Graph& g = ball.graph();
  const std::vector<double> epsilons =
      c.percolation.p_grid.empty() ? std::vector<double>{c.forest.epsilon} : c.percolation.p_grid;
  const std::string group = group_name(ball);
  json treeing = json::array();
  {
    CsvFile csv(sink, "cost.csv", {"group", "R", "p", "epsilon", "trials", "w", "w_se", "cost_hat", "cost_se"});
    for (double eps : epsilons) {
      const PipelineOptions options = pipeline_options(c, eps);
      const auto samples = run_trials<TreeingSample>(c.trials, c.workers, [&](std::size_t t) {
        const PipelineSample s = construct_f(g, options, derive_seed(c.seed, "cost", {std::bit_cast<std::uint64_t>(eps), t}));
        const auto dec = decompose_clusters(g, s.pi);
        return TreeingSample{dec.stats_of(0).touches_boundary, degree_in(g, s.f2.edges, 0)};
      });
      const TreeingEstimate est = treeing_cost_estimate(samples);
      const double cost_hat = est.cost_hat.value_or(std::nan(""));
      csv.row(group, ball.radius(), eps, eps, c.trials, est.w, est.w_se, cost_hat, est.cost_hat ? est.cost_se : std::nan(""));
      json row = {{"epsilon", eps},
                  {"w", est.w},
                  {"w_se", est.w_se},
                  {"conditioned", est.conditioned},
                  {"cost_hat", optional_number(est.cost_hat)},
                  {"cost_se", est.cost_hat ? json(est.cost_se) : json(nullptr)}};
      if (est.cost_hat && *est.cost_hat >= 1.0 && est.w > 0.0) {
        const double full = extend_to_full(*est.cost_hat, est.w);
        row["extended_cost"] = full;
        row["normalized_again"] = induction_normalize(full, est.w);
      }
      treeing.push_back(row);
    }
  }
  const double p = c.percolation.p;
  const Estimate graphing = graphing_cost_empirical(ball, p, c.trials, derive_seed(c.seed, "graphing"), c.workers);

  struct Return {
    bool found = false;
    bool identity = false;
    std::size_t rank = 0;
  };
  const auto returns = run_trials<Return>(c.trials, c.workers, [&](std::size_t t) {
    const BondConfig omega = sample_bonds(g, p, derive_seed(c.seed, "first-return", {t}));
    const auto hit = first_return(ball, decompose_clusters(g, omega));
    return hit ? Return{true, hit->gamma == 0, hit->rank} : Return{};
  });
  std::size_t found = 0, identity = 0;
  double rank_sum = 0.0;
  for (const Return& r : returns) {
    found += r.found ? 1 : 0;
    identity += r.identity ? 1 : 0;
    rank_sum += r.found ? static_cast<double>(r.rank) : 0.0;
  }
  json report = ball_json(ball);
  report["graphing"] = {{"p", p},
                        {"exact", graphing_cost_exact(ball.generators().size(), p)},
                        {"empirical", graphing.mean},
                        {"std_error", graphing.std_error},
                        {"trials", graphing.samples}};
  report["treeing"] = treeing;
  report["first_return"] = {{"p", p},
                            {"trials", c.trials},
                            {"identity", identity},
                            {"found", found},
                            {"not_found", c.trials - found},
                            {"mean_rank", found ? json(rank_sum / static_cast<double>(found)) : json(nullptr)}};
  report["provenance"] = sink.provenance();
  sink.write_json("cost.json", report);
  return {report, {}, 0};
}

RunResult run_indist(const ExperimentConfig& c, ArtifactSink& sink) {
  const CayleyBall ball = build_ball(c);
  const Graph& g = ball.graph();
  const double min_size = std::log2(static_cast<double>(ball.vertex_count()));
  const auto configs = run_trials<ConfigurationSample>(c.trials, c.workers, [&](std::size_t t) {
    const BondConfig omega = sample_bonds(g, c.percolation.p, derive_seed(c.seed, "indist", {t}));
    return collect_cluster_observables(g, omega, decompose_clusters(g, omega), c.indist.observable, min_size,
                                       derive_seed(c.seed, "indist-order", {t}));
  });
  IndistOptions o;
  o.observable = c.indist.observable;
  o.alpha = c.indist.alpha;
  o.resample = c.indist.resample;
  o.min_configurations = c.indist.min_configurations;
  o.seed = c.seed;
  const IndistReport r = indistinguishability_test(configs, o);
  {
    CsvFile csv(sink, "indist.csv", {"configuration", "large_clusters", "statistic"});
    std::size_t j = 0;
    for (std::size_t t = 0; t < configs.size(); ++t) {
      const auto& cl = configs[t].clusters;
      if (cl.size() >= 2 && !cl[0].empty() && !cl[1].empty()) {
        csv.row(t, cl.size(), r.within[j]);
        ++j;
      }
    }
  }
  json report = ball_json(ball);
  report["p"] = c.percolation.p;
  report["observable"] = r.observable;
  report["alpha"] = r.alpha;
  report["min_cluster_size"] = min_size;
  report["configurations"] = r.configurations;
  report["used"] = r.used;
  report["group_sizes"] = r.group_sizes;
  report["baseline_pairs"] = r.baseline_pairs;
  report["baseline_quantile"] = r.baseline_quantile;
  report["exceedance_rate"] = r.exceedance_rate;
  report["p_value"] = finite_or_null(r.p_value);
  report["distinguishable"] = r.distinguishable;
  report["provenance"] = sink.provenance();
  sink.write_json("indist.json", report);
  return {report, {}, 0};
}

RunResult run_selftest(const ExperimentConfig& c, ArtifactSink& sink) {
  const auto suites = oracle::run_selftest(c.seed);
  json list = json::array();
  bool ok = true;
  for (const auto& s : suites) {
    list.push_back({{"suite", s.name}, {"passed", s.passed}, {"cases", s.cases}, {"detail", s.detail}});
    ok = ok && s.passed;
  }
  json report = {{"passed", ok}, {"suites", list}, {"provenance", sink.provenance()}};
  sink.write_json("selftest.json", report);
  return {report, {}, ok ? 0 : static_cast<int>(ErrorCode::kCheckFailed)};
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {"ball", "percolate", "phase-scan", "wilson", "msf", "pipeline",
                                                 "blocks", "ends", "cost", "indist", "selftest"};
  return names;
}

std::string resolve_output_dir(const ExperimentConfig& config, std::string_view explicit_dir,
                               std::string_view subcommand) {
  std::filesystem::path base;
  if (!explicit_dir.empty()) {
    base = std::string(explicit_dir);
  } else if (!config.output_dir.empty()) {
    base = config.output_dir;
  } else if (const char* env = std::getenv("ORBIFOREST_OUT"); env && *env) {
    base = env;
  } else {
    base = "orbiforest-out";
  }
  return (base / std::string(subcommand)).string();
}

RunResult run(std::string_view subcommand, const ExperimentConfig& config, const std::string& out_dir) {
  using Runner = RunResult (*)(const ExperimentConfig&, ArtifactSink&);
  static const std::map<std::string, Runner, std::less<>> table = {
      {"ball", run_ball},         {"percolate", run_percolate}, {"phase-scan", run_phase_scan},
      {"wilson", run_wilson},     {"msf", run_msf},             {"pipeline", run_pipeline},
      {"blocks", run_blocks},     {"ends", run_ends},           {"cost", run_cost},
      {"indist", run_indist},     {"selftest", run_selftest}};
  const auto it = table.find(subcommand);
  if (it == table.end()) fail(ErrorCode::kInvalidArgument, fmt::format("unknown subcommand '{}'", subcommand));
  ArtifactSink sink(out_dir, config, std::string(subcommand));
  RunResult result = it->second(config, sink);
  result.artifacts = sink.written();
  return result;
}

}  // namespace orbi::lab
