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

#include <cmath>

#include <gtest/gtest.h>

#include "common/error.hpp"

namespace orbi {
namespace {

PhaseScanOptions options(std::vector<int> radii, std::vector<double> grid, std::size_t trials) {
  PhaseScanOptions o;
  o.radii = std::move(radii);
  o.p_grid = std::move(grid);
  o.trials = trials;
  o.seed = 4;
  return o;
}

TEST(PhaseScan, Endpoints) {
  const auto result = phase_scan(GroupSpec::free(2), {}, options({4}, {0.0, 1.0}, 20));
  ASSERT_EQ(result.rows.size(), 2u);
  EXPECT_EQ(result.rows[0].theta_hat, 0.0);
  EXPECT_EQ(result.rows[1].theta_hat, 1.0);
  EXPECT_EQ(result.rows[1].u_hat, 1.0);
  EXPECT_EQ(result.rows[1].nbig_hat, 1.0);
  EXPECT_TRUE(std::isnan(result.rows[0].u_hat));
}

TEST(PhaseScan, CurvesAreMonotone) {
  std::vector<double> grid;
  for (int k = 0; k <= 20; ++k) grid.push_back(k / 20.0);
  const auto result = phase_scan(GroupSpec::free(2), {}, options({5}, grid, 50));
  for (std::size_t i = 1; i < result.rows.size(); ++i) {
    EXPECT_LE(result.rows[i - 1].theta_hat, result.rows[i].theta_hat);
  }
}

TEST(PhaseScan, ReferencesAtDistanceAtLeastRadius) {
  for (int r : {2, 3, 6}) {
    const auto ball = CayleyBall::build(GroupSpec::free(2), {}, r);
    const ReferencePair refs = uniqueness_references(ball);
    EXPECT_EQ(ball.word_length(refs.a), static_cast<std::uint32_t>(r - 1));
    EXPECT_EQ(ball.word_length(refs.b), static_cast<std::uint32_t>(r - 1));
    EXPECT_EQ(refs.distance, static_cast<std::uint32_t>(2 * r - 2));
  }
}

TEST(PhaseScan, DegenerateRadius) {
  const auto ball = CayleyBall::build(GroupSpec::free(2), {}, 1);
  try {
    uniqueness_references(ball);
    FAIL() << "expected kDegenerate";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerate);
  }
}

TEST(PhaseScan, RejectsBadGrid) {
  EXPECT_THROW(phase_scan(GroupSpec::free(2), {}, options({3}, {0.5, 0.4}, 5)), Error);
  EXPECT_THROW(phase_scan(GroupSpec::free(2), {}, options({3}, {1.2}, 5)), Error);
  EXPECT_THROW(phase_scan(GroupSpec::free(2), {}, options({}, {0.5}, 5)), Error);
}

TEST(PhaseScan, WorkerCountDoesNotChangeRows) {
  auto o = options({4}, {0.2, 0.4, 0.6}, 40);
  const auto serial = phase_scan(GroupSpec::free(2), {}, o);
  o.workers = 3;
  const auto pooled = phase_scan(GroupSpec::free(2), {}, o);
  ASSERT_EQ(serial.rows.size(), pooled.rows.size());
  for (std::size_t i = 0; i < serial.rows.size(); ++i) {
    EXPECT_EQ(serial.rows[i].theta_hat, pooled.rows[i].theta_hat);
    EXPECT_EQ(serial.rows[i].nbig_hat, pooled.rows[i].nbig_hat);
  }
}

}  // namespace
}  // namespace orbi
