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

#include "forest/msf.hpp"

#include <algorithm>

#include "common/disjoint_sets.hpp"
#include "common/error.hpp"

namespace orbi {

ForestConfig msf_cycle_deletion(const Graph& graph, const BondConfig& subgraph,
                                const LabelConfig& labels) {
  if (subgraph.size() != graph.edge_count() || labels.size() != graph.edge_count()) {
    fail(ErrorCode::kInvalidArgument, "subgraph or labels do not match the graph");
  }
  std::vector<EdgeId> order;
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    if (subgraph.contains(e)) order.push_back(e);
  }
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return labels.less(a, b); });

  ForestConfig forest;
  forest.edges = BondConfig::empty(graph.edge_count());
  DisjointSets sets(graph.vertex_count());
  for (EdgeId e : order) {
    const Edge& ed = graph.edge(e);
    if (sets.same(ed.tail, ed.head)) continue;  // e closes a cycle of smaller labels
    sets.unite(ed.tail, ed.head);
    forest.edges.open[e] = 1;
  }
  return forest;
}

bool is_acyclic(const Graph& graph, const BondConfig& bonds) {
  DisjointSets sets(graph.vertex_count());
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    if (!bonds.contains(e)) continue;
    const Edge& ed = graph.edge(e);
    if (sets.same(ed.tail, ed.head)) return false;
    sets.unite(ed.tail, ed.head);
  }
  return true;
}

}  // namespace orbi
