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

#ifndef ORBIFOREST_FOREST_PIPELINE_HPP
#define ORBIFOREST_FOREST_PIPELINE_HPP

#include <cstdint>

#include "forest/msf.hpp"
#include "forest/wilson.hpp"

namespace orbi {

enum class ForestBuilder { kLoopErasedWalk, kStacks };

struct PipelineOptions {
  double epsilon = 0.05;
  ForestBuilder builder = ForestBuilder::kLoopErasedWalk;
  std::uint64_t pop_cap = kDefaultPopCap;
};

struct PipelineChecks {
  bool f2_acyclic = false;
  bool f2_inside_pi = false;
  bool partitions_match = false;    // components of F2 == components of pi
  bool clusters_rooted = false;     // every cluster of pi meets the wired root

  bool ok() const { return f2_acyclic && f2_inside_pi && partitions_match && clusters_rooted; }
};

// One draw of x = (omega, stacks, u) and its images.
struct PipelineSample {
  BondConfig omega;
  ForestConfig f1;  // wired spanning forest
  BondConfig pi;    // omega U F1
  LabelConfig msf_labels;
  ForestConfig f2;  // minimal spanning forest of pi
  PipelineChecks checks;
};

// omega ~ Bernoulli(epsilon), F1 from an independent stream, F2 from fresh
// labels. Streams are derived from `seed` under the contexts "omega", "wsf"
// and "msf-labels".
PipelineSample construct_f(const Graph& graph, const PipelineOptions& options, std::uint64_t seed);

PipelineChecks check_pipeline(const Graph& graph, const BondConfig& pi, const BondConfig& f2);

}  // namespace orbi

#endif  // ORBIFOREST_FOREST_PIPELINE_HPP
