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

#include <map>

#include <gtest/gtest.h>

#include "common/disjoint_sets.hpp"
#include "common/error.hpp"
#include "group/cayley.hpp"
#include "oracles/suites.hpp"

namespace orbi {
namespace {

TEST(HIndex, Examples) {
  EXPECT_EQ(h_index(0.0, 4), 1);
  EXPECT_EQ(h_index(0.25, 4), 1);
  EXPECT_EQ(h_index(0.26, 4), 2);
  EXPECT_EQ(h_index(0.5, 4), 2);
  EXPECT_EQ(h_index(0.51, 4), 3);
  EXPECT_EQ(h_index(1.0, 4), 4);
  EXPECT_EQ(h_index(0.7, 1), 1);
  EXPECT_THROW(h_index(1.1, 4), Error);
  EXPECT_THROW(h_index(0.5, 0), Error);
}

TEST(WiredRoots, BoundaryOrVertexZero) {
  const Graph plain = Graph::from_edges(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(wired_roots(plain), (std::vector<VertexId>{0}));
  const Graph wired = Graph::from_edges(3, {{0, 1}, {1, 2}}, {1, 0, 1});
  EXPECT_EQ(wired_roots(wired), (std::vector<VertexId>{0, 2}));
}

TEST(Wilson, PathHasOneSpanningTree) {
  const Graph path = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EXPECT_EQ(wilson_wired(path, seed).edges.count(), 5u);
    EXPECT_EQ(wilson_stacks(path, StackOracle(seed)).edges.count(), 5u);
  }
}

TEST(Wilson, TreeIsItsOwnSpanningTree) {
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    const Graph tree = oracle::random_graph(rng, 12, 0.0, true);
    const ForestConfig f = wilson_wired(tree, 100 + i);
    EXPECT_EQ(f.edges.count(), tree.edge_count());
  }
}

TEST(Wilson, EveryTreeHoldsOneRoot) {
  const auto ball = CayleyBall::build(GroupSpec::free_abelian(2), {}, 6);
  const Graph& g = ball.graph();
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const ForestConfig f = wilson_wired(g, seed);
    EXPECT_EQ(f.edges.count(), g.vertex_count() - g.boundary_vertices().size());
    DisjointSets sets(g.vertex_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!f.edges.contains(e)) continue;
      EXPECT_FALSE(sets.same(g.edge(e).tail, g.edge(e).head));
      sets.unite(g.edge(e).tail, g.edge(e).head);
    }
    std::map<std::uint32_t, int> roots_per_tree;
    for (VertexId v : g.boundary_vertices()) ++roots_per_tree[sets.find(v)];
    for (const auto& [tree, count] : roots_per_tree) EXPECT_EQ(count, 1);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      EXPECT_EQ(f.parent_edge[v] == kNone, g.is_boundary(v));
    }
  }
}

TEST(Wilson, UniformOnCompleteGraph) {
  const auto u = oracle::wilson_uniformity(oracle::complete_graph(4), 3, 16000);
  EXPECT_EQ(u.trees, 16u);
  EXPECT_TRUE(u.all_outputs_valid);
  EXPECT_GT(u.lerw_p, 1e-3);
  EXPECT_GT(u.stack_p, 1e-3);
  EXPECT_GT(u.two_sample_p, 1e-3);
}

TEST(WilsonStacks, PopsOneCycle) {
  // Path 0 - 1 - 2 with root 0. Vertex 1 first points at 2, vertex 2 back at
  // 1; that cycle pops and vertex 1 then points at the root.
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}}, {1, 0, 0});
  const StackOracle oracle([](std::uint64_t depth, VertexId v) {
    if (v == 1) return depth == 0 ? 1.0 : 0.1;
    return 0.5;
  });
  const ForestConfig f = wilson_stacks(g, oracle);
  EXPECT_EQ(f.parent_edge, (std::vector<EdgeId>{kNone, 0, 1}));
  EXPECT_EQ(f.pops, 1u);
  EXPECT_EQ(f.edges.count(), 2u);
}

TEST(WilsonStacks, PopCap) {
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}}, {1, 0, 0});
  const StackOracle oracle([](std::uint64_t, VertexId) { return 1.0; });
  try {
    wilson_stacks(g, oracle, 10);
    FAIL() << "expected cap";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
}

TEST(WilsonStacks, OrderIndependence) {
  const auto r = oracle::suite_pop_orders(12, 100);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Wilson, UnreachableVertexRejected) {
  const Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}}, {1, 0, 0, 0});
  EXPECT_THROW(wilson_wired(g, 1), Error);
}

}  // namespace
}  // namespace orbi
