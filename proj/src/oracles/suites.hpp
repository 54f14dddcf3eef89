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

// Oracle suites shared by `orbiforest selftest`, the unit tests and the
// acceptance run. Each suite is deterministic given its seed.

#ifndef ORBIFOREST_ORACLES_SUITES_HPP
#define ORBIFOREST_ORACLES_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "common/rng.hpp"
#include "group/graph.hpp"

namespace orbi::oracle {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first failure, or a short summary
};

// Random multigraph without loops. `connected` first lays a random spanning
// tree; `parallel` allows repeated endpoint pairs.
Graph random_graph(Rng& rng, std::size_t vertices, double edge_probability, bool connected,
                   bool parallel = false);

Graph complete_graph(std::size_t vertices);

SuiteResult suite_clusters(std::uint64_t seed, std::size_t instances);
SuiteResult suite_msf(std::uint64_t seed, std::size_t instances);
SuiteResult suite_msf_cut_duality(std::uint64_t seed, std::size_t instances);
SuiteResult suite_blocks(std::uint64_t seed, std::size_t instances);
SuiteResult suite_paths(std::uint64_t seed, std::size_t instances);
SuiteResult suite_matrix_tree(std::uint64_t seed, std::size_t instances);
SuiteResult suite_pop_orders(std::uint64_t seed, std::size_t instances);
SuiteResult suite_group(std::uint64_t seed, std::size_t pairs);
SuiteResult suite_ball_counts();
SuiteResult suite_tree_percolation(std::uint64_t seed, std::size_t trials);

struct WilsonUniformity {
  std::uint64_t trees = 0;                 // matrix-tree count
  std::vector<std::uint64_t> lerw_counts;  // per tree, in enumeration order
  std::vector<std::uint64_t> stack_counts;
  double lerw_p = 0.0;       // goodness of fit to uniform
  double stack_p = 0.0;
  double two_sample_p = 0.0;
  bool lerw_within_3sigma = false;
  bool stack_within_3sigma = false;
  bool all_outputs_valid = false;          // every sample is a wired spanning forest
};

WilsonUniformity wilson_uniformity(const Graph& graph, std::uint64_t seed, std::size_t runs);

SuiteResult suite_wilson(std::uint64_t seed, std::size_t runs);

// Every suite at selftest sizes.
std::vector<SuiteResult> run_selftest(std::uint64_t seed);

}  // namespace orbi::oracle

#endif  // ORBIFOREST_ORACLES_SUITES_HPP
