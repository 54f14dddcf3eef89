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

#ifndef ORBIFOREST_FOREST_WILSON_HPP
#define ORBIFOREST_FOREST_WILSON_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "group/graph.hpp"
#include "percolation/percolation.hpp"

namespace orbi {

inline constexpr std::uint64_t kDefaultPopCap = 1'000'000'000;

struct ForestConfig {
  BondConfig edges;
  // Edge toward the root for rooted forests, kNone at roots. Empty for
  // forests that carry no rooting (the minimal spanning forest).
  std::vector<EdgeId> parent_edge;
  std::vector<VertexId> roots;
  std::uint64_t pops = 0;
};

// 1-based incident-slot index ceil(d t), with h(0) = 1.
// Throws kInvalidArgument for t outside [0, 1] or d < 1.
int h_index(double t, int d);

// r(n, v): uniform value at stack depth n under vertex v.
class StackOracle {
 public:
  using Table = std::function<double(std::uint64_t depth, VertexId v)>;

  explicit StackOracle(std::uint64_t seed);
  explicit StackOracle(Table table) : table_(std::move(table)) {}

  double operator()(std::uint64_t depth, VertexId v) const { return table_(depth, v); }

 private:
  Table table_;
};

// Boundary vertices form the wired root; without boundary the root is vertex 0.
std::vector<VertexId> wired_roots(const Graph& graph);

// Loop-erased random walks from every non-root vertex in index order,
// stopped on the current tree. Returns the re-expanded forest: one tree per
// root, every vertex covered.
ForestConfig wilson_wired(const Graph& graph, std::uint64_t seed);

// Cycle popping: the n-th arrow under v is slot h(r(n, v)) of v. Arrows
// that form a cycle are popped until the tops form a forest rooted at the
// wired root. Throws kCapExceeded after `pop_cap` popped cycles.
ForestConfig wilson_stacks(const Graph& graph, const StackOracle& oracle,
                           std::uint64_t pop_cap = kDefaultPopCap);

}  // namespace orbi

#endif  // ORBIFOREST_FOREST_WILSON_HPP
