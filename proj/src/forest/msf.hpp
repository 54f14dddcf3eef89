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

#ifndef ORBIFOREST_FOREST_MSF_HPP
#define ORBIFOREST_FOREST_MSF_HPP

#include "forest/wilson.hpp"

namespace orbi {

// Minimal spanning forest of the open subgraph under labels u, i.e. the open
// edges that are not the maximum-label edge of any cycle. Computed with
// Kruskal per component; ties between equal labels go to the lower edge id.
ForestConfig msf_cycle_deletion(const Graph& graph, const BondConfig& subgraph,
                                const LabelConfig& labels);

// True iff the open edges contain no cycle.
bool is_acyclic(const Graph& graph, const BondConfig& bonds);

}  // namespace orbi

#endif  // ORBIFOREST_FOREST_MSF_HPP
