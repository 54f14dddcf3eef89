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

// Slow, independent reference implementations. Test and selftest use only.

#ifndef ORBIFOREST_ORACLES_ORACLES_HPP
#define ORBIFOREST_ORACLES_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "group/graph.hpp"
#include "percolation/percolation.hpp"

namespace orbi::oracle {

// Component label per vertex (minimum vertex index) by breadth-first search.
std::vector<VertexId> bfs_components(const Graph& graph, const BondConfig& bonds);

// Every simple cycle of the subgraph, as sorted edge sets. Parallel edges
// form 2-cycles. Exponential; meant for graphs of about ten vertices.
std::vector<std::vector<EdgeId>> simple_cycles(const Graph& graph, const BondConfig& bonds);

// Drops the maximum-label edge of every simple cycle.
BondConfig cycle_max_deletion(const Graph& graph, const BondConfig& bonds, const LabelConfig& labels);

// e is kept iff it is the minimum-label edge across some cut of its
// component. Enumerates vertex subsets; components of at most ~16 vertices.
BondConfig cut_min_edges(const Graph& graph, const BondConfig& bonds, const LabelConfig& labels);

// Blocks as sorted vertex sets: edges sharing a simple cycle are merged,
// isolated vertices are singleton blocks. Sorted lexicographically.
std::vector<std::vector<VertexId>> blocks_by_cycles(const Graph& graph, const BondConfig& bonds);

// Vertices whose removal splits their component.
std::vector<VertexId> cutvertices_by_removal(const Graph& graph, const BondConfig& bonds);

// Recursive count of simple a-b paths with at most max_len edges.
std::uint64_t simple_paths(const Graph& graph, const BondConfig& bonds, VertexId a, VertexId b,
                           std::uint32_t max_len);

// Number of spanning forests of the wired graph (boundary collapsed to one
// root, or vertex 0 as root without boundary), by an exact determinant.
std::uint64_t matrix_tree_count(const Graph& graph);

// All wired spanning forests, by subset enumeration. Tiny graphs only.
std::vector<BondConfig> wired_spanning_forests(const Graph& graph);

// P[o reaches depth R] for Bernoulli(p) percolation on the radius-R ball of
// the d-regular tree, by the exact depth recursion.
double tree_one_arm(int d, int radius, double p);

// Upper tail of Pearson's statistic against the given cell probabilities.
double chi2_goodness_of_fit(const std::vector<std::uint64_t>& counts, const std::vector<double>& probs);

// Homogeneity test of two count vectors over the same cells.
double chi2_two_sample(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);

// Explores every order of popping cycles among top-of-stack arrows.
// `arrow(v, depth)` names the edge on top of v's stack at that depth.
struct PopOutcome {
  std::vector<EdgeId> parent_edge;      // final top arrows, kNone at roots
  std::vector<std::uint64_t> depth;     // final stack depths
  friend bool operator<(const PopOutcome& a, const PopOutcome& b) {
    return a.parent_edge != b.parent_edge ? a.parent_edge < b.parent_edge : a.depth < b.depth;
  }
};
std::vector<PopOutcome> all_pop_orders(const Graph& graph, const std::vector<VertexId>& roots,
                                       const std::function<EdgeId(VertexId, std::uint64_t)>& arrow,
                                       std::uint64_t max_pops, std::uint64_t* orders_explored = nullptr);

}  // namespace orbi::oracle

#endif  // ORBIFOREST_ORACLES_ORACLES_HPP
