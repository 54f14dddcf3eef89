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

#include "percolation/phase_scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "common/error.hpp"
#include "common/parallel.hpp"
#include "common/rng.hpp"

namespace orbi {
namespace {

struct TrialCurves {
  std::vector<std::uint8_t> theta;
  std::vector<std::uint8_t> both;
  std::vector<std::uint8_t> same;
  std::vector<std::uint32_t> nbig;
};

// Union-find carrying the boundary flag and the "big boundary cluster" count.
class SweepSets {
 public:
  SweepSets(const Graph& graph, double big_threshold)
      : parent_(graph.vertex_count()), size_(graph.vertex_count(), 1),
        boundary_(graph.vertex_count()), big_threshold_(big_threshold) {
    std::iota(parent_.begin(), parent_.end(), 0u);
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
      boundary_[v] = graph.is_boundary(v) ? 1 : 0;
      if (big(v)) ++big_count_;
    }
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (big(a)) --big_count_;
    if (big(b)) --big_count_;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    boundary_[a] |= boundary_[b];
    if (big(a)) ++big_count_;
  }

  bool touches_boundary(std::uint32_t x) { return boundary_[find(x)] != 0; }
  std::uint32_t big_count() const { return big_count_; }

 private:
  bool big(std::uint32_t root) const {
    return boundary_[root] && static_cast<double>(size_[root]) >= big_threshold_;
  }

  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::vector<std::uint8_t> boundary_;
  double big_threshold_;
  std::uint32_t big_count_ = 0;
};

void validate(const PhaseScanOptions& options) {
  if (options.radii.empty()) fail(ErrorCode::kInvalidArgument, "phase scan needs at least one radius");
  if (options.p_grid.empty()) fail(ErrorCode::kInvalidArgument, "phase scan needs a nonempty p grid");
  if (options.trials < 1) fail(ErrorCode::kInvalidArgument, "phase scan needs trials >= 1");
  for (std::size_t i = 0; i < options.p_grid.size(); ++i) {
    const double p = options.p_grid[i];
    if (!(p >= 0.0 && p <= 1.0)) fail(ErrorCode::kInvalidArgument, fmt::format("grid value {} outside [0, 1]", p));
    if (i > 0 && !(p > options.p_grid[i - 1])) {
      fail(ErrorCode::kInvalidArgument, "p grid must be strictly increasing");
    }
  }
}

}  // namespace

ReferencePair uniqueness_references(const CayleyBall& ball) {
  const int r = ball.radius();
  if (r < 2) {
    fail(ErrorCode::kDegenerate,
         fmt::format("radius {} too small for antipodal reference vertices (need >= 2)", r));
  }
  const auto target = static_cast<std::uint32_t>(r - 1);
  VertexId a = kNone;
  for (VertexId v = 0; v < ball.vertex_count(); ++v) {
    if (ball.word_length(v) == target) {
      a = v;
      break;
    }
  }
  if (a == kNone) fail(ErrorCode::kDegenerate, fmt::format("no vertex at word length {}", target));
  const auto dist = ball.graph().distances_from(a);
  VertexId b = kNone;
  for (VertexId v = 0; v < ball.vertex_count(); ++v) {
    if (ball.word_length(v) != target || dist[v] == kNone) continue;
    if (b == kNone || dist[v] > dist[b]) b = v;
  }
  if (b == kNone || dist[b] < static_cast<std::uint32_t>(r)) {
    fail(ErrorCode::kDegenerate,
         fmt::format("reference vertices at distance {} < radius {}", b == kNone ? 0u : dist[b], r));
  }
  return ReferencePair{a, b, dist[b]};
}

PhaseScanRadius scan_ball(const CayleyBall& ball, const PhaseScanOptions& options,
                          std::vector<PhaseScanRow>& rows) {
  validate(options);
  const Graph& graph = ball.graph();
  const ReferencePair refs = uniqueness_references(ball);
  const std::size_t grid = options.p_grid.size();
  const std::size_t edges = graph.edge_count();
  const double big_threshold = std::log2(static_cast<double>(graph.vertex_count()));

  auto run = [&](std::size_t trial) {
    const std::uint64_t stream =
        derive_seed(options.seed, "phase-scan", {static_cast<std::uint64_t>(ball.radius()), trial});
    // Bucket each edge by the first grid value at which it opens.
    std::vector<std::uint32_t> bucket(edges);
    std::vector<std::uint32_t> start(grid + 2, 0);
    for (EdgeId e = 0; e < edges; ++e) {
      const double u = counter_uniform(stream, e);
      const auto k = static_cast<std::uint32_t>(
          std::lower_bound(options.p_grid.begin(), options.p_grid.end(), u) - options.p_grid.begin());
      bucket[e] = k;
      ++start[k + 1];
    }
    for (std::size_t k = 0; k <= grid; ++k) start[k + 1] += start[k];
    std::vector<EdgeId> order(edges);
    {
      std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
      for (EdgeId e = 0; e < edges; ++e) order[fill[bucket[e]]++] = e;
    }

    TrialCurves curves{std::vector<std::uint8_t>(grid), std::vector<std::uint8_t>(grid),
                       std::vector<std::uint8_t>(grid), std::vector<std::uint32_t>(grid)};
    SweepSets sets(graph, big_threshold);
    for (std::size_t k = 0; k < grid; ++k) {
      for (std::uint32_t i = start[k]; i < start[k + 1]; ++i) {
        const Edge& ed = graph.edge(order[i]);
        sets.unite(ed.tail, ed.head);
      }
      curves.theta[k] = sets.touches_boundary(0);
      const bool both = sets.touches_boundary(refs.a) && sets.touches_boundary(refs.b);
      curves.both[k] = both;
      curves.same[k] = both && sets.find(refs.a) == sets.find(refs.b);
      curves.nbig[k] = sets.big_count();
    }
    return curves;
  };

  const auto trials = run_trials<TrialCurves>(options.trials, options.workers, run);

  PhaseScanRadius summary{ball.radius(), ball.vertex_count(), refs, std::nullopt, std::nullopt};
  const double n = static_cast<double>(options.trials);
  for (std::size_t k = 0; k < grid; ++k) {
    std::size_t theta = 0, both = 0, same = 0;
    std::uint64_t nbig = 0;
    for (const TrialCurves& t : trials) {
      theta += t.theta[k];
      both += t.both[k];
      same += t.same[k];
      nbig += t.nbig[k];
    }
    PhaseScanRow row;
    row.radius = ball.radius();
    row.p = options.p_grid[k];
    row.trials = options.trials;
    row.theta_hat = static_cast<double>(theta) / n;
    row.se_theta = std::sqrt(row.theta_hat * (1.0 - row.theta_hat) / n);
    row.u_hat = both == 0 ? std::numeric_limits<double>::quiet_NaN()
                          : static_cast<double>(same) / static_cast<double>(both);
    row.nbig_hat = static_cast<double>(nbig) / n;
    row.u_conditioned = both;
    if (!summary.p_c_hat && row.theta_hat >= options.delta_c) summary.p_c_hat = row.p;
    if (!summary.p_u_hat && both > 0 && row.u_hat >= 1.0 - options.delta_u) summary.p_u_hat = row.p;
    rows.push_back(row);
  }
  return summary;
}

PhaseScanResult phase_scan(const GroupSpec& spec, const std::vector<std::string>& generators,
                           const PhaseScanOptions& options) {
  validate(options);
  PhaseScanResult result;
  for (int radius : options.radii) {
    const CayleyBall ball = CayleyBall::build(spec, generators, radius, options.vertex_cap);
    result.summary.push_back(scan_ball(ball, options, result.rows));
  }
  return result;
}

}  // namespace orbi
