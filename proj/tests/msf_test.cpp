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

#include <gtest/gtest.h>

#include "common/error.hpp"
#include "common/rng.hpp"
#include "oracles/oracles.hpp"
#include "oracles/suites.hpp"

namespace orbi {
namespace {

TEST(Msf, TriangleDropsHeaviestEdge) {
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  const LabelConfig labels{{0.1, 0.3, 0.2}};
  const ForestConfig f = msf_cycle_deletion(g, BondConfig::full(3), labels);
  EXPECT_EQ(f.edges.open, (std::vector<std::uint8_t>{1, 0, 1}));
  EXPECT_TRUE(f.parent_edge.empty());
}

TEST(Msf, DropsTheNinetyEdge) {
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  const ForestConfig f = msf_cycle_deletion(g, BondConfig::full(3), LabelConfig{{0.2, 0.5, 0.9}});
  EXPECT_EQ(f.edges.open, (std::vector<std::uint8_t>{1, 1, 0}));
}

TEST(Msf, ForestUnchanged) {
  Rng rng(4);
  const Graph tree = oracle::random_graph(rng, 9, 0.0, true);
  const BondConfig all = BondConfig::full(tree.edge_count());
  EXPECT_EQ(msf_cycle_deletion(tree, all, sample_labels(tree, 2)).edges, all);
}

TEST(Msf, ClosedEdgesStayOut) {
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  const LabelConfig labels{{0.1, 0.3, 0.2}};
  const ForestConfig f = msf_cycle_deletion(g, BondConfig{{1, 1, 0}}, labels);
  EXPECT_EQ(f.edges.open, (std::vector<std::uint8_t>{1, 1, 0}));
}

TEST(Msf, ParallelEdgesKeepLighter) {
  const Graph g = Graph::from_edges(2, {{0, 1}, {0, 1}});
  const ForestConfig f = msf_cycle_deletion(g, BondConfig::full(2), LabelConfig{{0.5, 0.4}});
  EXPECT_EQ(f.edges.open, (std::vector<std::uint8_t>{0, 1}));
}

TEST(Msf, TiesGoToLowerEdgeId) {
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  const ForestConfig f = msf_cycle_deletion(g, BondConfig::full(3), LabelConfig{{0.5, 0.5, 0.5}});
  EXPECT_EQ(f.edges.open, (std::vector<std::uint8_t>{1, 1, 0}));
}

TEST(Msf, MatchesCycleDeletionOracle) {
  const auto r = oracle::suite_msf(31, 200);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Msf, MatchesCutCharacterization) {
  const auto r = oracle::suite_msf_cut_duality(32, 200);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Msf, SizeMismatchRejected) {
  const Graph g = Graph::from_edges(2, {{0, 1}});
  EXPECT_THROW(msf_cycle_deletion(g, BondConfig::full(2), LabelConfig{{0.1, 0.2}}), Error);
}

TEST(Acyclic, Basics) {
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}, {0, 1}});
  EXPECT_TRUE(is_acyclic(g, BondConfig{{1, 1, 0, 0}}));
  EXPECT_FALSE(is_acyclic(g, BondConfig{{1, 1, 1, 0}}));
  EXPECT_FALSE(is_acyclic(g, BondConfig{{1, 0, 0, 1}}));
  EXPECT_TRUE(is_acyclic(g, BondConfig::empty(4)));
}

}  // namespace
}  // namespace orbi
