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

#ifndef ORBIFOREST_FOREST_STRUCTURE_HPP
#define ORBIFOREST_FOREST_STRUCTURE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "group/graph.hpp"
#include "percolation/percolation.hpp"

namespace orbi {

// Blocks of the open subgraph. An isolated vertex is its own block; every
// open edge lies in exactly one block.
struct BlockReport {
  std::vector<std::vector<VertexId>> blocks;      // sorted vertex sets
  std::vector<std::vector<EdgeId>> block_edges;   // parallel to blocks, sorted
  std::vector<VertexId> cutvertices;              // sorted
  std::size_t max_block_size = 0;
  std::map<std::size_t, std::size_t> histogram;   // block size -> count
  double median_block_size = 0.0;
};

BlockReport blocks(const Graph& graph, const BondConfig& subgraph);

struct PathCount {
  std::uint64_t count = 0;
  bool saturated = false;  // count stopped at the cap
};

// Simple paths (edge sequences without repeated vertices) from a to b with at
// most max_len edges. a == b counts the empty path only.
PathCount count_simple_paths(const Graph& graph, const BondConfig& subgraph, VertexId a,
                             VertexId b, std::uint32_t max_len, std::uint64_t cap);

struct EndsProfile {
  std::vector<std::uint32_t> radii;
  std::vector<std::uint32_t> counts;
};

// For each r, the number of components of the cluster vertices at distance
// >= r from center (distances in the whole graph) holding a boundary vertex.
// r = 0 removes nothing; r = 1 removes the center alone.
// Throws kInvalidArgument if center is not in the cluster or some r >= radius_limit.
EndsProfile ends_profile(const Graph& graph, const BondConfig& subgraph,
                         const std::vector<VertexId>& cluster, VertexId center,
                         const std::vector<std::uint32_t>& radii, std::uint32_t radius_limit);

}  // namespace orbi

#endif  // ORBIFOREST_FOREST_STRUCTURE_HPP
