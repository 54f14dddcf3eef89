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

#include "cost/cost.hpp"

#include <cmath>

#include <fmt/format.h>

#include "common/error.hpp"
#include "common/parallel.hpp"
#include "common/rng.hpp"

namespace orbi {
namespace {

double as_double(double x) { return x; }
double as_double(const mpq_class& x) { return x.get_d(); }

template <typename Real>
void require_weight(const Real& w) {
  if (!(w > 0 && w <= 1)) {
    fail(ErrorCode::kInvalidArgument, fmt::format("w = {} outside (0, 1]", as_double(w)));
  }
}

}  // namespace

Estimate estimate_mean(std::span<const double> values) {
  Estimate out;
  out.samples = values.size();
  if (values.empty()) return out;
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double squares = 0.0;
    for (double v : values) squares += (v - out.mean) * (v - out.mean);
    const double variance = squares / static_cast<double>(values.size() - 1);
    out.std_error = std::sqrt(variance / static_cast<double>(values.size()));
  }
  return out;
}

double graphing_cost_exact(std::size_t generator_count, double p) {
  if (!(p >= 0.0 && p <= 1.0)) fail(ErrorCode::kInvalidArgument, fmt::format("p = {} outside [0, 1]", p));
  return static_cast<double>(generator_count) * p;
}

Estimate graphing_cost_empirical(const CayleyBall& ball, double p, std::size_t trials,
                                 std::uint64_t seed, unsigned workers) {
  if (!(p >= 0.0 && p <= 1.0)) fail(ErrorCode::kInvalidArgument, fmt::format("p = {} outside [0, 1]", p));
  if (trials < 1) fail(ErrorCode::kInvalidArgument, "graphing cost needs trials >= 1");
  if (ball.radius() < 1) fail(ErrorCode::kDegenerate, "graphing cost needs radius >= 1");

  // Edge (o, o s) sits in slot s of the origin.
  const Graph& graph = ball.graph();
  const auto origin_slots = graph.slots(0);
  std::vector<EdgeId> origin_edges;
  for (std::size_t i = 0; i < ball.generators().size(); ++i) origin_edges.push_back(origin_slots[i]);

  // Only the origin edges are drawn; with counter-based labels they equal
  // the corresponding entries of a full sample_labels call.
  const auto counts = run_trials<double>(trials, workers, [&](std::size_t t) {
    const std::uint64_t stream = derive_seed(seed, "graphing-cost", {t});
    double open = 0.0;
    for (EdgeId e : origin_edges) {
      if (counter_uniform(stream, e) <= p) open += 1.0;
    }
    return open;
  });
  return estimate_mean(counts);
}

TreeingEstimate treeing_cost_estimate(std::span<const TreeingSample> samples) {
  if (samples.empty()) fail(ErrorCode::kInsufficientData, "treeing estimate needs at least one sample");
  TreeingEstimate out;
  out.samples = samples.size();
  std::vector<double> touch;
  std::vector<double> half_degree;
  for (const TreeingSample& s : samples) {
    touch.push_back(s.origin_touches_boundary ? 1.0 : 0.0);
    if (s.origin_touches_boundary) half_degree.push_back(0.5 * s.origin_degree);
  }
  const Estimate w = estimate_mean(touch);
  out.w = w.mean;
  out.w_se = std::sqrt(out.w * (1.0 - out.w) / static_cast<double>(samples.size()));
  out.conditioned = half_degree.size();
  if (!half_degree.empty()) {
    const Estimate c = estimate_mean(half_degree);
    out.cost_hat = c.mean;
    out.cost_se = c.std_error;
  }
  return out;
}

template <typename Real>
Real induction_normalize(const Real& extended_cost, const Real& w) {
  require_weight(w);
  if (extended_cost < w) {
    fail(ErrorCode::kInvalidArgument,
         fmt::format("extended cost {} below w = {}", as_double(extended_cost), as_double(w)));
  }
  return Real(1) + (extended_cost - Real(1)) / w;
}

template <typename Real>
Real extend_to_full(const Real& restricted_cost, const Real& w) {
  require_weight(w);
  if (restricted_cost < 1) {
    fail(ErrorCode::kInvalidArgument,
         fmt::format("restricted normalized cost {} below 1", as_double(restricted_cost)));
  }
  return Real(1) + w * (restricted_cost - Real(1));
}

template double induction_normalize<double>(const double&, const double&);
template double extend_to_full<double>(const double&, const double&);
template mpq_class induction_normalize<mpq_class>(const mpq_class&, const mpq_class&);
template mpq_class extend_to_full<mpq_class>(const mpq_class&, const mpq_class&);

std::optional<FirstReturn> first_return(const CayleyBall& ball, const ClusterDecomposition& clusters) {
  const std::uint32_t reach = static_cast<std::uint32_t>(ball.radius()) / 2;
  // Vertex order is the length-then-generator enumeration.
  for (VertexId gamma = 0; gamma < ball.vertex_count(); ++gamma) {
    if (ball.word_length(gamma) > reach) break;
    const auto translate = ball.find(ball.group().inverse(ball.element(gamma)));
    if (!translate) continue;
    if (clusters.stats_of(*translate).touches_boundary) {
      return FirstReturn{gamma, *translate, gamma};
    }
  }
  return std::nullopt;
}

}  // namespace orbi
