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

#include "forest/structure.hpp"

#include <gtest/gtest.h>

#include "common/error.hpp"
#include "group/cayley.hpp"
#include "oracles/oracles.hpp"
#include "oracles/suites.hpp"

namespace orbi {
namespace {

std::vector<VertexId> all_vertices(const Graph& g) {
  std::vector<VertexId> out(g.vertex_count());
  for (VertexId v = 0; v < out.size(); ++v) out[v] = v;
  return out;
}

TEST(Blocks, TriangleWithPendantAndIsolated) {
  const Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  const BlockReport r = blocks(g, BondConfig::full(4));
  auto sorted = r.blocks;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<std::vector<VertexId>>{{0, 1, 2}, {2, 3}, {4}}));
  EXPECT_EQ(r.cutvertices, (std::vector<VertexId>{2}));
  EXPECT_EQ(r.max_block_size, 3u);
  EXPECT_EQ(r.median_block_size, 2.0);
  EXPECT_EQ(r.histogram.at(1), 1u);
}

TEST(Blocks, TreeEdgesAreBlocks) {
  const auto ball = CayleyBall::build(GroupSpec::free(2), {}, 3);
  const Graph& g = ball.graph();
  const BlockReport r = blocks(g, BondConfig::full(g.edge_count()));
  EXPECT_EQ(r.blocks.size(), g.edge_count());
  for (const auto& b : r.blocks) EXPECT_EQ(b.size(), 2u);
  std::vector<VertexId> internal;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_boundary(v)) internal.push_back(v);
  }
  EXPECT_EQ(r.cutvertices, internal);
}

TEST(Blocks, ParallelEdgesFormOneBlock) {
  const Graph g = Graph::from_edges(3, {{0, 1}, {0, 1}, {1, 2}});
  const BlockReport r = blocks(g, BondConfig::full(3));
  ASSERT_EQ(r.blocks.size(), 2u);
  EXPECT_EQ(r.cutvertices, (std::vector<VertexId>{1}));
}

TEST(Blocks, MatchOracle) {
  const auto r = oracle::suite_blocks(41, 200);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Paths, Examples) {
  const Graph cycle = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const BondConfig all = BondConfig::full(5);
  EXPECT_EQ(count_simple_paths(cycle, all, 0, 1, 4, 100).count, 2u);
  EXPECT_EQ(count_simple_paths(cycle, all, 0, 1, 3, 100).count, 1u);
  EXPECT_EQ(count_simple_paths(cycle, all, 0, 0, 4, 100).count, 1u);
  EXPECT_EQ(count_simple_paths(cycle, BondConfig{{0, 1, 1, 1, 0}}, 0, 1, 9, 100).count, 0u);
  const PathCount capped = count_simple_paths(cycle, all, 0, 2, 9, 1);
  EXPECT_EQ(capped.count, 1u);
  EXPECT_TRUE(capped.saturated);
  EXPECT_THROW(count_simple_paths(cycle, all, 0, 9, 4, 10), Error);
}

TEST(Paths, CompleteGraph) {
  const Graph k4 = oracle::complete_graph(4);
  const BondConfig all = BondConfig::full(k4.edge_count());
  EXPECT_EQ(count_simple_paths(k4, all, 0, 1, 3, 100).count, 5u);
  EXPECT_EQ(count_simple_paths(k4, all, 0, 1, 1, 100).count, 1u);
}

TEST(Paths, MatchOracle) {
  const auto r = oracle::suite_paths(42, 200);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Ends, IntegersHaveTwo) {
  const auto ball = CayleyBall::build(GroupSpec::free(1), {}, 4);
  const Graph& g = ball.graph();
  const EndsProfile p =
      ends_profile(g, BondConfig::full(g.edge_count()), all_vertices(g), 0, {1, 2}, 4);
  EXPECT_EQ(p.counts, (std::vector<std::uint32_t>{2, 2}));
}

TEST(Ends, FreeTreeHasFourAtRadiusOne) {
  const auto ball = CayleyBall::build(GroupSpec::free(2), {}, 3);
  const Graph& g = ball.graph();
  const EndsProfile p =
      ends_profile(g, BondConfig::full(g.edge_count()), all_vertices(g), 0, {0, 1, 2}, 3);
  EXPECT_EQ(p.counts, (std::vector<std::uint32_t>{1, 4, 12}));
}

TEST(Ends, SingletonHasNone) {
  const auto ball = CayleyBall::build(GroupSpec::free(2), {}, 3);
  const Graph& g = ball.graph();
  const EndsProfile p = ends_profile(g, BondConfig::empty(g.edge_count()), {0}, 0, {1}, 3);
  EXPECT_EQ(p.counts, (std::vector<std::uint32_t>{0}));
}

TEST(Ends, Validation) {
  const auto ball = CayleyBall::build(GroupSpec::free(2), {}, 3);
  const Graph& g = ball.graph();
  const BondConfig none = BondConfig::empty(g.edge_count());
  EXPECT_THROW(ends_profile(g, none, {0}, 1, {1}, 3), Error);
  EXPECT_THROW(ends_profile(g, none, {0}, 0, {3}, 3), Error);
}

}  // namespace
}  // namespace orbi
