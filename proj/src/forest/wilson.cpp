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

#include "forest/wilson.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include <fmt/format.h>

#include "common/error.hpp"
#include "common/rng.hpp"

namespace orbi {
namespace {

// Every vertex must reach a root through the graph, otherwise walks never stop.
void require_rooted(const Graph& graph, const std::vector<std::uint8_t>& is_root) {
  std::vector<std::uint8_t> seen = is_root;
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (is_root[v]) queue.push_back(v);
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : graph.slots(v)) {
      if (e == kNone) continue;
      const VertexId w = graph.other(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (!seen[v]) fail(ErrorCode::kInvalidArgument, fmt::format("vertex {} cannot reach a root", v));
  }
}

ForestConfig rooted_forest(const Graph& graph, const std::vector<VertexId>& roots) {
  ForestConfig forest;
  forest.edges = BondConfig::empty(graph.edge_count());
  forest.parent_edge.assign(graph.vertex_count(), kNone);
  forest.roots = roots;
  return forest;
}

std::vector<std::uint8_t> root_mask(const Graph& graph, const std::vector<VertexId>& roots) {
  std::vector<std::uint8_t> mask(graph.vertex_count(), 0);
  for (VertexId r : roots) mask[r] = 1;
  return mask;
}

}  // namespace

int h_index(double t, int d) {
  if (!(t >= 0.0 && t <= 1.0)) fail(ErrorCode::kInvalidArgument, fmt::format("h: t = {} outside [0, 1]", t));
  if (d < 1) fail(ErrorCode::kInvalidArgument, fmt::format("h: degree {} < 1", d));
  if (t == 0.0) return 1;
  const int k = static_cast<int>(std::ceil(static_cast<double>(d) * t));
  return std::clamp(k, 1, d);
}

StackOracle::StackOracle(std::uint64_t seed)
    : table_([stream = derive_seed(seed, "stack-oracle")](std::uint64_t depth, VertexId v) {
        return counter_uniform(stream, (depth << 32) | v);
      }) {}

std::vector<VertexId> wired_roots(const Graph& graph) {
  if (graph.vertex_count() == 0) return {};
  auto roots = graph.boundary_vertices();
  if (roots.empty()) roots.push_back(0);
  return roots;
}

ForestConfig wilson_wired(const Graph& graph, std::uint64_t seed) {
  const auto roots = wired_roots(graph);
  ForestConfig forest = rooted_forest(graph, roots);
  std::vector<std::uint8_t> in_tree = root_mask(graph, roots);
  require_rooted(graph, in_tree);

  Rng rng(seed);
  std::vector<EdgeId> next(graph.vertex_count(), kNone);
  auto step = [&](VertexId u) {
    const auto slots = graph.slots(u);
    for (;;) {
      const EdgeId e = slots[rng.below(slots.size())];
      if (e != kNone) return e;
    }
  };

  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    // Overwriting next[] on revisits erases loops in chronological order.
    for (VertexId u = v; !in_tree[u];) {
      next[u] = step(u);
      u = graph.other(next[u], u);
    }
    for (VertexId u = v; !in_tree[u];) {
      in_tree[u] = 1;
      forest.parent_edge[u] = next[u];
      forest.edges.open[next[u]] = 1;
      u = graph.other(next[u], u);
    }
  }
  return forest;
}

ForestConfig wilson_stacks(const Graph& graph, const StackOracle& oracle, std::uint64_t pop_cap) {
  const auto roots = wired_roots(graph);
  ForestConfig forest = rooted_forest(graph, roots);
  std::vector<std::uint8_t> in_tree = root_mask(graph, roots);
  require_rooted(graph, in_tree);

  const std::size_t n = graph.vertex_count();
  std::vector<std::uint64_t> depth(n, 0);
  std::vector<std::uint32_t> position(n, kNone);
  std::vector<VertexId> path;

  // Top of the stack under u. Entries naming an absent slot are discarded;
  // they are not cycles and do not count as pops.
  auto top = [&](VertexId u) {
    const auto slots = graph.slots(u);
    const int d = static_cast<int>(slots.size());
    for (;;) {
      const EdgeId e = slots[h_index(oracle(depth[u], u), d) - 1];
      if (e != kNone) return e;
      ++depth[u];
    }
  };

  for (VertexId v = 0; v < n; ++v) {
    if (in_tree[v]) continue;
    path.assign(1, v);
    position[v] = 0;
    VertexId u = v;
    for (;;) {
      const VertexId w = graph.other(top(u), u);
      if (in_tree[w]) break;
      if (position[w] == kNone) {
        position[w] = static_cast<std::uint32_t>(path.size());
        path.push_back(w);
        u = w;
        continue;
      }
      // The arrows w -> ... -> u -> w form a cycle: pop every stack on it.
      const std::uint32_t start = position[w];
      for (std::size_t i = start; i < path.size(); ++i) {
        ++depth[path[i]];
        position[path[i]] = kNone;
      }
      path.resize(start);
      if (++forest.pops > pop_cap) {
        fail(ErrorCode::kCapExceeded, fmt::format("cycle popping exceeded pop cap {}", pop_cap));
      }
      position[w] = static_cast<std::uint32_t>(path.size());
      path.push_back(w);
      u = w;
    }
    for (VertexId x : path) {
      const EdgeId e = top(x);
      in_tree[x] = 1;
      position[x] = kNone;
      forest.parent_edge[x] = e;
      forest.edges.open[e] = 1;
    }
  }
  return forest;
}

}  // namespace orbi
