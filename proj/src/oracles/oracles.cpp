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

#include "oracles/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <set>

#include <boost/math/distributions/chi_squared.hpp>
#include <gmpxx.h>

#include "common/disjoint_sets.hpp"
#include "common/error.hpp"

namespace orbi::oracle {
namespace {

std::vector<std::vector<std::pair<EdgeId, VertexId>>> open_neighbors(const Graph& graph,
                                                                     const BondConfig& bonds) {
  std::vector<std::vector<std::pair<EdgeId, VertexId>>> adj(graph.vertex_count());
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    if (!bonds.contains(e)) continue;
    const Edge& ed = graph.edge(e);
    adj[ed.tail].emplace_back(e, ed.head);
    adj[ed.head].emplace_back(e, ed.tail);
  }
  return adj;
}

std::size_t component_count(const std::vector<std::vector<std::pair<EdgeId, VertexId>>>& adj,
                            VertexId removed) {
  std::vector<std::uint8_t> seen(adj.size(), 0);
  std::size_t count = 0;
  for (VertexId s = 0; s < adj.size(); ++s) {
    if (s == removed || seen[s]) continue;
    ++count;
    std::deque<VertexId> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (const auto& [e, w] : adj[v]) {
        if (w != removed && !seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return count;
}

void collect_paths(const std::vector<std::vector<std::pair<EdgeId, VertexId>>>& adj, VertexId v,
                   VertexId b, std::uint32_t budget, std::vector<std::uint8_t>& on_path,
                   std::uint64_t& count) {
  if (v == b) {
    ++count;
    return;
  }
  if (budget == 0) return;
  on_path[v] = 1;
  for (const auto& [e, w] : adj[v]) {
    if (!on_path[w]) collect_paths(adj, w, b, budget - 1, on_path, count);
  }
  on_path[v] = 0;
}

// Wired index: 0 is the collapsed root, other vertices follow in order.
std::vector<std::uint32_t> wired_index(const Graph& graph, std::size_t& size) {
  std::vector<std::uint32_t> index(graph.vertex_count(), 0);
  const bool boundary = graph.has_boundary();
  size = 1;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    const bool root = boundary ? graph.is_boundary(v) : v == 0;
    index[v] = root ? 0 : static_cast<std::uint32_t>(size++);
  }
  return index;
}

}  // namespace

std::vector<VertexId> bfs_components(const Graph& graph, const BondConfig& bonds) {
  const auto adj = open_neighbors(graph, bonds);
  std::vector<VertexId> label(graph.vertex_count(), kNone);
  for (VertexId s = 0; s < graph.vertex_count(); ++s) {
    if (label[s] != kNone) continue;
    std::deque<VertexId> queue{s};
    label[s] = s;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (const auto& [e, w] : adj[v]) {
        if (label[w] == kNone) {
          label[w] = s;
          queue.push_back(w);
        }
      }
    }
  }
  return label;
}

std::vector<std::vector<EdgeId>> simple_cycles(const Graph& graph, const BondConfig& bonds) {
  const auto adj = open_neighbors(graph, bonds);
  std::set<std::vector<EdgeId>> found;
  std::vector<EdgeId> path;
  std::vector<std::uint8_t> on_path(graph.vertex_count(), 0);

  // Cycles through `start` whose other vertices all exceed it.
  std::function<void(VertexId, VertexId)> extend = [&](VertexId start, VertexId v) {
    for (const auto& [e, w] : adj[v]) {
      if (!path.empty() && e == path.back()) continue;
      if (w == start) {
        std::vector<EdgeId> cycle = path;
        cycle.push_back(e);
        std::sort(cycle.begin(), cycle.end());
        if (std::adjacent_find(cycle.begin(), cycle.end()) == cycle.end()) found.insert(cycle);
        continue;
      }
      if (w < start || on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(e);
      extend(start, w);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  for (VertexId s = 0; s < graph.vertex_count(); ++s) {
    on_path[s] = 1;
    extend(s, s);
    on_path[s] = 0;
  }
  return {found.begin(), found.end()};
}

BondConfig cycle_max_deletion(const Graph& graph, const BondConfig& bonds, const LabelConfig& labels) {
  BondConfig kept = bonds;
  for (const auto& cycle : simple_cycles(graph, bonds)) {
    EdgeId worst = cycle.front();
    for (EdgeId e : cycle) {
      if (labels.less(worst, e)) worst = e;
    }
    kept.open[worst] = 0;
  }
  return kept;
}

BondConfig cut_min_edges(const Graph& graph, const BondConfig& bonds, const LabelConfig& labels) {
  const auto comp = bfs_components(graph, bonds);
  BondConfig kept = BondConfig::empty(graph.edge_count());
  for (VertexId c = 0; c < graph.vertex_count(); ++c) {
    if (comp[c] != c) continue;
    std::vector<VertexId> members;
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
      if (comp[v] == c) members.push_back(v);
    }
    if (members.size() > 16) fail(ErrorCode::kInvalidArgument, "cut oracle limited to 16 vertices");
    std::vector<std::uint8_t> side(graph.vertex_count(), 0);
    // Subsets containing members[0] cover every cut once.
    const std::uint32_t free_bits = static_cast<std::uint32_t>(members.size() - 1);
    for (std::uint32_t mask = 0; mask + 1 < (1u << free_bits); ++mask) {
      side[members[0]] = 1;
      for (std::uint32_t i = 0; i < free_bits; ++i) side[members[i + 1]] = (mask >> i) & 1u;
      EdgeId best = kNone;
      for (EdgeId e = 0; e < graph.edge_count(); ++e) {
        if (!bonds.contains(e) || comp[graph.edge(e).tail] != c) continue;
        if (side[graph.edge(e).tail] == side[graph.edge(e).head]) continue;
        if (best == kNone || labels.less(e, best)) best = e;
      }
      if (best != kNone) kept.open[best] = 1;
    }
  }
  return kept;
}

std::vector<std::vector<VertexId>> blocks_by_cycles(const Graph& graph, const BondConfig& bonds) {
  DisjointSets edge_sets(graph.edge_count());
  for (const auto& cycle : simple_cycles(graph, bonds)) {
    for (EdgeId e : cycle) edge_sets.unite(cycle.front(), e);
  }
  std::map<std::uint32_t, std::set<VertexId>> grouped;
  std::vector<std::uint8_t> touched(graph.vertex_count(), 0);
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    if (!bonds.contains(e)) continue;
    auto& block = grouped[edge_sets.find(e)];
    block.insert(graph.edge(e).tail);
    block.insert(graph.edge(e).head);
    touched[graph.edge(e).tail] = touched[graph.edge(e).head] = 1;
  }
  std::vector<std::vector<VertexId>> out;
  for (const auto& [root, block] : grouped) out.emplace_back(block.begin(), block.end());
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (!touched[v]) out.push_back({v});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> cutvertices_by_removal(const Graph& graph, const BondConfig& bonds) {
  const auto adj = open_neighbors(graph, bonds);
  const std::size_t base = component_count(adj, kNone);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    // Removing an isolated vertex drops one component; anything else keeps
    // the count unless v separates its component.
    const std::size_t isolated = adj[v].empty() ? 1 : 0;
    if (component_count(adj, v) + isolated > base) out.push_back(v);
  }
  return out;
}

std::uint64_t simple_paths(const Graph& graph, const BondConfig& bonds, VertexId a, VertexId b,
                           std::uint32_t max_len) {
  const auto adj = open_neighbors(graph, bonds);
  std::vector<std::uint8_t> on_path(graph.vertex_count(), 0);
  std::uint64_t count = 0;
  collect_paths(adj, a, b, max_len, on_path, count);
  return count;
}

std::uint64_t matrix_tree_count(const Graph& graph) {
  std::size_t size = 0;
  const auto index = wired_index(graph, size);
  const std::size_t n = size - 1;  // reduced Laplacian drops the root row
  std::vector<std::vector<mpq_class>> lap(n, std::vector<mpq_class>(n, 0));
  for (const Edge& ed : graph.edges()) {
    const std::uint32_t a = index[ed.tail], b = index[ed.head];
    if (a == b) continue;
    if (a > 0) lap[a - 1][a - 1] += 1;
    if (b > 0) lap[b - 1][b - 1] += 1;
    if (a > 0 && b > 0) {
      lap[a - 1][b - 1] -= 1;
      lap[b - 1][a - 1] -= 1;
    }
  }
  mpq_class det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && lap[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(lap[pivot], lap[col]);
      det = -det;
    }
    det *= lap[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (lap[row][col] == 0) continue;
      const mpq_class factor = lap[row][col] / lap[col][col];
      for (std::size_t k = col; k < n; ++k) lap[row][k] -= factor * lap[col][k];
    }
  }
  return det.get_num().get_ui();
}

std::vector<BondConfig> wired_spanning_forests(const Graph& graph) {
  std::size_t size = 0;
  const auto index = wired_index(graph, size);
  std::vector<EdgeId> usable;
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    if (index[graph.edge(e).tail] != index[graph.edge(e).head]) usable.push_back(e);
  }
  if (usable.size() > 24) fail(ErrorCode::kInvalidArgument, "forest enumeration limited to 24 edges");
  std::vector<BondConfig> out;
  for (std::uint32_t mask = 0; mask < (1u << usable.size()); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != size - 1) continue;
    DisjointSets sets(size);
    bool acyclic = true;
    BondConfig forest = BondConfig::empty(graph.edge_count());
    for (std::size_t i = 0; i < usable.size() && acyclic; ++i) {
      if (!((mask >> i) & 1u)) continue;
      const EdgeId e = usable[i];
      const std::uint32_t a = index[graph.edge(e).tail], b = index[graph.edge(e).head];
      if (sets.same(a, b)) acyclic = false;
      sets.unite(a, b);
      forest.open[e] = 1;
    }
    if (acyclic) out.push_back(std::move(forest));
  }
  return out;
}

double tree_one_arm(int d, int radius, double p) {
  if (radius == 0) return 1.0;
  // q: a non-root vertex k levels above depth R reaches depth R downward.
  double q = 1.0;
  for (int k = 1; k < radius; ++k) q = 1.0 - std::pow(1.0 - p * q, d - 1);
  return 1.0 - std::pow(1.0 - p * q, d);
}

double chi2_goodness_of_fit(const std::vector<std::uint64_t>& counts, const std::vector<double>& probs) {
  if (counts.size() != probs.size() || counts.size() < 2) {
    fail(ErrorCode::kInvalidArgument, "chi2: need matching cells, at least two");
  }
  double total = 0.0;
  for (auto c : counts) total += static_cast<double>(c);
  double stat = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double expected = total * probs[i];
    const double diff = static_cast<double>(counts[i]) - expected;
    stat += diff * diff / expected;
  }
  const boost::math::chi_squared_distribution<double> law(static_cast<double>(counts.size() - 1));
  return boost::math::cdf(boost::math::complement(law, stat));
}

double chi2_two_sample(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  if (a.size() != b.size()) fail(ErrorCode::kInvalidArgument, "chi2: cell counts differ");
  double na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    na += static_cast<double>(a[i]);
    nb += static_cast<double>(b[i]);
  }
  double stat = 0.0;
  std::size_t cells = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double pooled = static_cast<double>(a[i] + b[i]);
    if (pooled == 0.0) continue;
    ++cells;
    const double ea = na * pooled / (na + nb);
    const double eb = nb * pooled / (na + nb);
    stat += (static_cast<double>(a[i]) - ea) * (static_cast<double>(a[i]) - ea) / ea;
    stat += (static_cast<double>(b[i]) - eb) * (static_cast<double>(b[i]) - eb) / eb;
  }
  if (cells < 2) return 1.0;
  const boost::math::chi_squared_distribution<double> law(static_cast<double>(cells - 1));
  return boost::math::cdf(boost::math::complement(law, stat));
}

std::vector<PopOutcome> all_pop_orders(const Graph& graph, const std::vector<VertexId>& roots,
                                       const std::function<EdgeId(VertexId, std::uint64_t)>& arrow,
                                       std::uint64_t max_pops, std::uint64_t* orders_explored) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::uint8_t> is_root(n, 0);
  for (VertexId r : roots) is_root[r] = 1;

  std::set<PopOutcome> outcomes;
  std::set<std::vector<std::uint64_t>> visited;
  std::uint64_t explored = 0;

  std::function<void(std::vector<std::uint64_t>&, std::uint64_t)> visit =
      [&](std::vector<std::uint64_t>& depth, std::uint64_t pops) {
        ++explored;
        if (!visited.insert(depth).second) return;
        std::vector<VertexId> next(n, kNone);
        std::vector<EdgeId> top(n, kNone);
        for (VertexId v = 0; v < n; ++v) {
          if (is_root[v]) continue;
          top[v] = arrow(v, depth[v]);
          next[v] = graph.other(top[v], v);
        }
        // Cycles of the functional graph v -> next[v].
        std::vector<std::vector<VertexId>> cycles;
        std::vector<std::uint8_t> state(n, 0);  // 0 new, 1 on walk, 2 done
        for (VertexId s = 0; s < n; ++s) {
          std::vector<VertexId> walk;
          VertexId v = s;
          while (v != kNone && state[v] == 0) {
            state[v] = 1;
            walk.push_back(v);
            v = next[v];
          }
          if (v != kNone && state[v] == 1) {
            const auto from = std::find(walk.begin(), walk.end(), v);
            cycles.emplace_back(from, walk.end());
          }
          for (VertexId w : walk) state[w] = 2;
        }
        if (cycles.empty()) {
          outcomes.insert(PopOutcome{top, depth});
          return;
        }
        if (pops >= max_pops) fail(ErrorCode::kCapExceeded, "pop-order enumeration exceeded its cap");
        for (const auto& cycle : cycles) {
          for (VertexId v : cycle) ++depth[v];
          visit(depth, pops + 1);
          for (VertexId v : cycle) --depth[v];
        }
      };

  std::vector<std::uint64_t> depth(n, 0);
  visit(depth, 0);
  if (orders_explored) *orders_explored = explored;
  return {outcomes.begin(), outcomes.end()};
}

}  // namespace orbi::oracle
