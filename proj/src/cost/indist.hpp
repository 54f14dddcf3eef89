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

#ifndef ORBIFOREST_COST_INDIST_HPP
#define ORBIFOREST_COST_INDIST_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "group/graph.hpp"
#include "percolation/percolation.hpp"

namespace orbi {

enum class Observable { kOpenEdgeDensity, kMeanDegree, kGrowthRatio };

Observable parse_observable(std::string_view name);
const char* observable_name(Observable o);

// Per-vertex observable values of one cluster.
using ClusterSample = std::vector<double>;

// Large boundary-touching clusters of one configuration.
struct ConfigurationSample {
  std::vector<ClusterSample> clusters;
};

// Observable values for every boundary-touching cluster with at least
// `min_size` vertices. Cluster order is a seeded shuffle, so the first two
// clusters are an exchangeable pair.
ConfigurationSample collect_cluster_observables(const Graph& graph, const BondConfig& bonds,
                                                const ClusterDecomposition& clusters,
                                                Observable observable, double min_size,
                                                std::uint64_t order_seed);

// Largest gap between the empirical CDFs of two sorted samples.
double ks_distance(std::span<const double> sorted_a, std::span<const double> sorted_b);

struct IndistOptions {
  Observable observable = Observable::kMeanDegree;
  double alpha = 0.05;
  std::size_t resample = 200;
  std::size_t min_configurations = 30;
  std::uint64_t seed = 0;
};

struct IndistReport {
  std::string observable;
  double alpha = 0.0;
  std::size_t configurations = 0;        // offered
  std::size_t used = 0;                  // with >= 2 large clusters
  std::vector<std::size_t> group_sizes;  // large clusters per used configuration
  std::vector<double> within;            // statistic per used configuration
  std::size_t baseline_pairs = 0;
  double baseline_quantile = 0.0;        // (1 - alpha) quantile of the baseline
  double exceedance_rate = 0.0;
  double p_value = 1.0;                  // P[Bin(used, alpha) >= exceedances]
  bool distinguishable = false;          // p_value < alpha
};

// Within each configuration the statistic compares its first two clusters,
// each resampled to `resample` vertices with one common stream of uniforms.
// The baseline compares same-position clusters across configurations.
// Throws kInsufficientData when fewer than min_configurations qualify.
IndistReport indistinguishability_test(std::span<const ConfigurationSample> samples,
                                       const IndistOptions& options);

}  // namespace orbi

#endif  // ORBIFOREST_COST_INDIST_HPP
