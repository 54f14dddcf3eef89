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
#include <gtest/gtest.h>

#include "common/error.hpp"
#include "common/rng.hpp"
#include "oracles/oracles.hpp"

namespace orbi {
namespace {

TEST(GraphingCost, Exact) {
  EXPECT_DOUBLE_EQ(graphing_cost_exact(2, 0.3), 0.6);
  EXPECT_DOUBLE_EQ(graphing_cost_exact(3, 0.4), 1.2);
  EXPECT_DOUBLE_EQ(graphing_cost_exact(2, 1.0), 2.0);
  EXPECT_EQ(graphing_cost_exact(2, 0.0), 0.0);
  EXPECT_THROW(graphing_cost_exact(2, 1.1), Error);
}

TEST(GraphingCost, EmpiricalMatchesExact) {
  const auto ball = CayleyBall::build(GroupSpec::free(2), {}, 2);
  EXPECT_EQ(graphing_cost_empirical(ball, 0.0, 100, 6).mean, 0.0);
  EXPECT_EQ(graphing_cost_empirical(ball, 1.0, 100, 6).mean, 2.0);
  for (double p : {0.1, 0.5, 0.9}) {
    const Estimate e = graphing_cost_empirical(ball, p, 10000, 6);
    EXPECT_NEAR(e.mean, graphing_cost_exact(2, p), 4.0 * e.std_error + 1e-12);
  }
}

TEST(GraphingCost, NeedsRadiusOne) {
  const auto ball = CayleyBall::build(GroupSpec::free(2), {}, 0);
  try {
    graphing_cost_empirical(ball, 0.5, 10, 1);
    FAIL() << "expected kDegenerate";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerate);
  }
}

TEST(Induction, ExactRationals) {
  const mpq_class c(7, 5), w(1, 3);
  const mpq_class full = extend_to_full(c, w);
  EXPECT_EQ(full, mpq_class(17, 15));
  EXPECT_EQ(induction_normalize(full, w), c);
  EXPECT_EQ(induction_normalize(mpq_class(1), mpq_class(1, 2)), mpq_class(1));
}

TEST(Induction, RoundTripOnRandomRationals) {
  Rng rng(13);
  for (int i = 0; i < 1000; ++i) {
    const mpq_class w(static_cast<long>(rng.below(999) + 1), 1000);
    mpq_class c(static_cast<long>(1000 + rng.below(5000)), static_cast<long>(1 + rng.below(1000)));
    c.canonicalize();
    if (c < 1) c += 1;
    ASSERT_EQ(induction_normalize(extend_to_full(c, w), w), c);
  }
}

TEST(Induction, DoubleArithmetic) {
  EXPECT_DOUBLE_EQ(induction_normalize(1.5, 0.5), 2.0);
  EXPECT_DOUBLE_EQ(induction_normalize(1.0, 0.3), 1.0);
  EXPECT_DOUBLE_EQ(extend_to_full(2.0, 0.5), 1.5);
  EXPECT_DOUBLE_EQ(extend_to_full(1.0, 0.7), 1.0);
  EXPECT_GT(extend_to_full(1.01, 0.01), 1.0);
}

TEST(Induction, DomainErrors) {
  EXPECT_THROW(induction_normalize(1.2, 0.0), Error);
  EXPECT_THROW(induction_normalize(1.2, 1.5), Error);
  EXPECT_THROW(induction_normalize(0.1, 0.5), Error);
  EXPECT_THROW(extend_to_full(0.9, 0.5), Error);
}

TEST(TreeingEstimate, HandComputed) {
  const std::vector<TreeingSample> samples{{true, 4}, {true, 2}, {false, 0}, {true, 2}};
  const TreeingEstimate e = treeing_cost_estimate(samples);
  EXPECT_DOUBLE_EQ(e.w, 0.75);
  EXPECT_EQ(e.conditioned, 3u);
  ASSERT_TRUE(e.cost_hat.has_value());
  EXPECT_DOUBLE_EQ(*e.cost_hat, 4.0 / 3.0);
  EXPECT_NEAR(e.cost_se, std::sqrt((1.0 / 3.0) / 3.0), 1e-12);
}

TEST(TreeingEstimate, EmptyAndUnconditioned) {
  EXPECT_THROW(treeing_cost_estimate({}), Error);
  const std::vector<TreeingSample> none{{false, 0}, {false, 1}};
  EXPECT_FALSE(treeing_cost_estimate(none).cost_hat.has_value());
}

TEST(FirstReturn, IdentityWhenOriginTouches) {
  const auto ball = CayleyBall::build(GroupSpec::free(2), {}, 4);
  const Graph& g = ball.graph();
  const auto hit = first_return(ball, decompose_clusters(g, BondConfig::full(g.edge_count())));
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->gamma, 0u);
  EXPECT_EQ(hit->rank, 0u);
}

TEST(FirstReturn, EmptyOmegaIsCensored) {
  const auto ball = CayleyBall::build(GroupSpec::free(2), {}, 4);
  const Graph& g = ball.graph();
  EXPECT_FALSE(first_return(ball, decompose_clusters(g, BondConfig::empty(g.edge_count()))).has_value());
}

TEST(FirstReturn, PlantedArm) {
  // Only the ray a^-1, a^-2, ... is open, so gamma = a is the first return.
  const auto ball = CayleyBall::build(GroupSpec::free(2), {}, 4);
  const Graph& g = ball.graph();
  const Group& grp = ball.group();
  BondConfig bonds = BondConfig::empty(g.edge_count());
  for (int k = 1; k < 4; ++k) {
    const VertexId x = *ball.find(grp.normalize(fmt::format("a^{}", -k)));
    const VertexId y = *ball.find(grp.normalize(fmt::format("a^{}", -k - 1)));
    for (EdgeId e : g.incident_edges(x)) {
      if (g.other(e, x) == y) bonds.open[e] = 1;
    }
  }
  const auto hit = first_return(ball, decompose_clusters(g, bonds));
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(ball.vertex_label(hit->gamma), "a");
  EXPECT_EQ(ball.vertex_label(hit->translate), "a^-1");
  EXPECT_EQ(hit->rank, 1u);
}

TEST(FirstReturn, MinimalAgainstBruteForce) {
  const auto ball = CayleyBall::build(GroupSpec::free_product_cyclic({2, 3, kInfiniteOrder}), {}, 4);
  const Graph& g = ball.graph();
  const Group& grp = ball.group();
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const BondConfig bonds = sample_bonds(g, 0.45, seed);
    const auto comp = oracle::bfs_components(g, bonds);
    std::vector<std::uint8_t> touches(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.is_boundary(v)) touches[comp[v]] = 1;
    }
    std::optional<VertexId> expected;
    for (VertexId v = 0; v < g.vertex_count() && !expected; ++v) {
      if (ball.word_length(v) > 2) continue;
      // gamma^-1 by re-parsing the inverted word.
      const auto inv = ball.find(grp.normalize(grp.format(grp.inverse(ball.element(v)))));
      if (inv && touches[comp[*inv]]) expected = v;
    }
    const auto hit = first_return(ball, decompose_clusters(g, bonds));
    ASSERT_EQ(hit.has_value(), expected.has_value()) << "seed " << seed;
    if (hit) EXPECT_EQ(hit->gamma, *expected) << "seed " << seed;
  }
}

}  // namespace
}  // namespace orbi
