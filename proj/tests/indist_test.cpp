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

#include "cost/indist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "common/error.hpp"
#include "common/rng.hpp"

namespace orbi {
namespace {

std::vector<double> normal_sample(Rng& rng, std::size_t n, double mean) {
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i) {
    // Box-Muller keeps the draw independent of the standard library's distribution code.
    const double u = rng.uniform(), v = rng.uniform();
    out.push_back(mean + std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v));
  }
  return out;
}

IndistOptions opts() {
  IndistOptions o;
  o.alpha = 0.05;
  o.resample = 100;
  o.min_configurations = 30;
  o.seed = 3;
  return o;
}

TEST(KsDistance, Examples) {
  const std::vector<double> a{1, 2, 3};
  EXPECT_EQ(ks_distance(a, a), 0.0);
  EXPECT_EQ(ks_distance(std::vector<double>{0, 0}, std::vector<double>{1, 1}), 1.0);
  EXPECT_DOUBLE_EQ(ks_distance(std::vector<double>{1, 2}, std::vector<double>{2, 3}), 0.5);
  EXPECT_EQ(ks_distance(std::vector<double>{}, a), 0.0);
}

TEST(Observable, Names) {
  for (const char* n : {"open-edge-density", "mean-degree", "growth-ratio"}) {
    EXPECT_STREQ(observable_name(parse_observable(n)), n);
  }
  EXPECT_THROW(parse_observable("volume"), Error);
}

TEST(Indist, DuplicateClustersGiveZero) {
  Rng rng(1);
  std::vector<ConfigurationSample> samples(60);
  for (auto& s : samples) {
    const auto c = normal_sample(rng, 50, 0.0);
    s.clusters = {c, c};
  }
  const IndistReport r = indistinguishability_test(samples, opts());
  EXPECT_EQ(r.used, 60u);
  for (double w : r.within) EXPECT_EQ(w, 0.0);
  EXPECT_EQ(r.exceedance_rate, 0.0);
  EXPECT_EQ(r.p_value, 1.0);
  EXPECT_FALSE(r.distinguishable);
}

TEST(Indist, PlantedDifferenceDetected) {
  Rng rng(2);
  std::vector<ConfigurationSample> samples(100);
  for (auto& s : samples) s.clusters = {normal_sample(rng, 80, 0.0), normal_sample(rng, 80, 1.5)};
  const IndistReport r = indistinguishability_test(samples, opts());
  EXPECT_GE(r.exceedance_rate, 0.9);
  EXPECT_TRUE(r.distinguishable);
  EXPECT_LT(r.p_value, 1e-6);
}

TEST(Indist, ExchangeableClustersNotFlagged) {
  Rng rng(4);
  std::vector<ConfigurationSample> samples(100);
  for (auto& s : samples) s.clusters = {normal_sample(rng, 80, 0.0), normal_sample(rng, 80, 0.0)};
  const IndistReport r = indistinguishability_test(samples, opts());
  EXPECT_LE(r.exceedance_rate, 2 * opts().alpha);
}

TEST(Indist, InsufficientData) {
  Rng rng(5);
  std::vector<ConfigurationSample> samples(40);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    samples[i].clusters.push_back(normal_sample(rng, 10, 0.0));
    if (i < 20) samples[i].clusters.push_back(normal_sample(rng, 10, 0.0));
  }
  try {
    indistinguishability_test(samples, opts());
    FAIL() << "expected kInsufficientData";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInsufficientData);
  }
}

TEST(Indist, RejectsBadAlpha) {
  std::vector<ConfigurationSample> samples;
  IndistOptions o = opts();
  o.alpha = 1.0;
  EXPECT_THROW(indistinguishability_test(samples, o), Error);
}

TEST(CollectObservables, LargeBoundaryClustersOnly) {
  // Two boundary-touching paths of 4 vertices and one interior pair.
  const Graph g = Graph::from_edges(
      10, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {8, 9}},
      {0, 0, 0, 1, 0, 0, 0, 1, 0, 0});
  const BondConfig all = BondConfig::full(g.edge_count());
  const auto dec = decompose_clusters(g, all);
  const auto s = collect_cluster_observables(g, all, dec, Observable::kMeanDegree, 3.0, 9);
  ASSERT_EQ(s.clusters.size(), 2u);
  for (const auto& c : s.clusters) {
    std::vector<double> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, (std::vector<double>{1, 1, 2, 2}));
  }
  const auto growth = collect_cluster_observables(g, all, dec, Observable::kGrowthRatio, 3.0, 9);
  std::vector<double> sorted = growth.clusters[0];
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<double>{4.0 / 3.0, 4.0 / 3.0, 1.5, 1.5}));
}

}  // namespace
}  // namespace orbi
