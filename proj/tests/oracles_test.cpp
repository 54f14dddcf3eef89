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

#include <cmath>

#include <gtest/gtest.h>

#include "oracles/suites.hpp"

namespace orbi::oracle {
namespace {

TEST(MatrixTree, SmallGraphs) {
  EXPECT_EQ(matrix_tree_count(complete_graph(3)), 3u);
  EXPECT_EQ(matrix_tree_count(complete_graph(4)), 16u);
  EXPECT_EQ(matrix_tree_count(complete_graph(5)), 125u);
  // Path with both ends wired: the two ends collapse into one root, leaving a 2-cycle.
  EXPECT_EQ(matrix_tree_count(Graph::from_edges(3, {{0, 1}, {1, 2}}, {1, 0, 1})), 2u);
}

TEST(MatrixTree, EnumerationAgrees) {
  const auto r = suite_matrix_tree(51, 60);
  EXPECT_TRUE(r.passed) << r.detail;
}

// Direct enumeration of the 2^9 bond configurations on the radius-2 ball of
// the 3-regular tree.
double ternary_tree_radius_two(double p) {
  double theta = 0.0;
  for (unsigned mask = 0; mask < 512; ++mask) {
    double weight = 1.0;
    for (int e = 0; e < 9; ++e) weight *= (mask >> e & 1) ? p : 1.0 - p;
    bool reached = false;
    for (int child = 0; child < 3; ++child) {
      if (!(mask >> child & 1)) continue;
      for (int leaf = 0; leaf < 2; ++leaf) reached = reached || (mask >> (3 + 2 * child + leaf) & 1);
    }
    if (reached) theta += weight;
  }
  return theta;
}

TEST(TreeOneArm, MatchesEnumeration) {
  for (double p : {0.1, 0.35, 0.5, 0.8}) {
    EXPECT_NEAR(tree_one_arm(3, 2, p), ternary_tree_radius_two(p), 1e-12);
    EXPECT_NEAR(tree_one_arm(4, 1, p), 1.0 - std::pow(1.0 - p, 4), 1e-12);
  }
  EXPECT_EQ(tree_one_arm(4, 5, 0.0), 0.0);
  EXPECT_EQ(tree_one_arm(4, 5, 1.0), 1.0);
}

TEST(Chi2, Extremes) {
  EXPECT_NEAR(chi2_goodness_of_fit({25, 25, 25, 25}, {0.25, 0.25, 0.25, 0.25}), 1.0, 1e-12);
  EXPECT_LT(chi2_goodness_of_fit({100, 0, 0, 0}, {0.25, 0.25, 0.25, 0.25}), 1e-10);
  EXPECT_NEAR(chi2_two_sample({10, 20, 30}, {10, 20, 30}), 1.0, 1e-12);
}

TEST(SimpleCycles, Counts) {
  const Graph k4 = complete_graph(4);
  EXPECT_EQ(simple_cycles(k4, BondConfig::full(6)).size(), 7u);  // 4 triangles + 3 squares
  const Graph doubled = Graph::from_edges(2, {{0, 1}, {0, 1}, {0, 1}});
  EXPECT_EQ(simple_cycles(doubled, BondConfig::full(3)).size(), 3u);
}

TEST(Suites, BallCounts) {
  const auto r = suite_ball_counts();
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Suites, TreePercolation) {
  const auto r = suite_tree_percolation(61, 2000);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Suites, SelftestPasses) {
  for (const auto& s : run_selftest(7)) EXPECT_TRUE(s.passed) << s.name << ": " << s.detail;
}

}  // namespace
}  // namespace orbi::oracle
