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

#include "common/rng.hpp"

#include <cmath>
#include <set>

#include <gtest/gtest.h>

namespace orbi {
namespace {

// Frozen vectors, computed by an independent implementation.
TEST(Rng, Mix64Vectors) {
  EXPECT_EQ(mix64(0), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(mix64(1), 0x910A2DEC89025CC1ULL);
}

TEST(Rng, Fnv1aVectors) {
  EXPECT_EQ(fnv1a64(""), 0xCBF29CE484222325ULL);
  EXPECT_EQ(fnv1a64("omega"), 0x3460CBAE3AD8BE88ULL);
}

TEST(Rng, DeriveSeedVectors) {
  EXPECT_EQ(derive_seed(1, "omega"), 0x9BE448FA0AAF8892ULL);
  EXPECT_EQ(derive_seed(42, "phase-scan", {10, 3}), 0xF57BD6C22E07FE66ULL);
  EXPECT_EQ(derive_seed(0, ""), 0x21FA69A58F3D62F5ULL);
}

TEST(Rng, CounterUniformVectors) {
  EXPECT_DOUBLE_EQ(counter_uniform(derive_seed(7, "labels"), 5), 0.270839823152367);
  EXPECT_DOUBLE_EQ(counter_uniform(0, 0), 0.8833108082136427);
}

TEST(Rng, DistinctContextsAndIndices) {
  std::set<std::uint64_t> seen;
  for (const char* ctx : {"omega", "wsf", "msf-labels", "phase-scan"}) {
    for (std::uint64_t i = 0; i < 100; ++i) seen.insert(derive_seed(1, ctx, {i}));
  }
  EXPECT_EQ(seen.size(), 400u);
  EXPECT_NE(derive_seed(1, "a", {1, 2}), derive_seed(1, "a", {2, 1}));
}

TEST(Rng, UnitIntervalExcludesZero) {
  EXPECT_GT(bits_to_unit(0), 0.0);
  EXPECT_EQ(bits_to_unit(~0ULL), 1.0);
}

TEST(Rng, BelowStaysInRange) {
  Rng rng(3);
  for (int i = 0; i < 10000; ++i) EXPECT_LT(rng.below(7), 7u);
}

TEST(Rng, UniformMeanAndVariance) {
  Rng rng(11);
  const int n = 100000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    sum += u;
    sq += u * u;
  }
  EXPECT_NEAR(sum / n, 0.5, 0.01);
  EXPECT_NEAR(sq / n - (sum / n) * (sum / n), 1.0 / 12.0, 0.005);
}

}  // namespace
}  // namespace orbi
