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

#include "forest/pipeline.hpp"

#include <fmt/format.h>

#include "common/error.hpp"
#include "common/rng.hpp"

namespace orbi {

PipelineChecks check_pipeline(const Graph& graph, const BondConfig& pi, const BondConfig& f2) {
  PipelineChecks checks;
  checks.f2_acyclic = is_acyclic(graph, f2);
  checks.f2_inside_pi = f2.is_subset_of(pi);
  const ClusterDecomposition pi_clusters = decompose_clusters(graph, pi);
  const ClusterDecomposition f2_clusters = decompose_clusters(graph, f2);
  // Canonical ids are minimum members, so equal id vectors mean equal partitions.
  checks.partitions_match = pi_clusters.cluster_ids() == f2_clusters.cluster_ids();
  if (graph.has_boundary()) {
    checks.clusters_rooted = true;
    for (const ClusterStats& c : pi_clusters.clusters()) {
      checks.clusters_rooted = checks.clusters_rooted && c.touches_boundary;
    }
  } else {
    checks.clusters_rooted = pi_clusters.clusters().size() <= 1;
  }
  return checks;
}

PipelineSample construct_f(const Graph& graph, const PipelineOptions& options, std::uint64_t seed) {
  if (!(options.epsilon >= 0.0 && options.epsilon <= 1.0)) {
    fail(ErrorCode::kInvalidArgument, fmt::format("epsilon = {} outside [0, 1]", options.epsilon));
  }
  PipelineSample sample;
  sample.omega = sample_bonds(graph, options.epsilon, derive_seed(seed, "omega"));
  const std::uint64_t forest_seed = derive_seed(seed, "wsf");
  sample.f1 = options.builder == ForestBuilder::kStacks
                  ? wilson_stacks(graph, StackOracle(forest_seed), options.pop_cap)
                  : wilson_wired(graph, forest_seed);
  sample.pi = sample.omega.united_with(sample.f1.edges);
  sample.msf_labels = sample_labels(graph, derive_seed(seed, "msf-labels"));
  sample.f2 = msf_cycle_deletion(graph, sample.pi, sample.msf_labels);
  sample.checks = check_pipeline(graph, sample.pi, sample.f2.edges);
  return sample;
}

}  // namespace orbi
