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

#ifndef ORBIFOREST_GROUP_GRAPH_HPP
#define ORBIFOREST_GROUP_GRAPH_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace orbi {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

struct Edge {
  VertexId tail;
  VertexId head;
  std::uint32_t generator;  // index into the generating multiset; 0 for plain graphs
};

// Finite multigraph with an ordered list of incidence slots per vertex and a
// boundary flag per vertex. Every algorithm in the library runs on this type;
// Cayley balls and hand-built test graphs only differ in how they fill it.
//
// A slot holds an edge id or kNone (an edge-end that left the ball). In a
// Cayley ball every vertex has d slots ordered S then S^-1; in a plain graph
// the slots are the incident edges in edge-id order.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::uint8_t> boundary,
        std::vector<std::uint32_t> slot_offsets, std::vector<EdgeId> slot_edges);

  // Plain multigraph: slots are incident edges in edge-id order. Loops are
  // rejected. `boundary` may be empty (no boundary vertices).
  static Graph from_edges(std::size_t vertex_count,
                          const std::vector<std::pair<VertexId, VertexId>>& edges,
                          std::vector<std::uint8_t> boundary = {});

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  bool is_boundary(VertexId v) const { return !boundary_.empty() && boundary_[v] != 0; }
  bool has_boundary() const;
  std::vector<VertexId> boundary_vertices() const;

  std::span<const EdgeId> slots(VertexId v) const {
    return {slot_edges_.data() + slot_offsets_[v], slot_offsets_[v + 1] - slot_offsets_[v]};
  }

  VertexId other(EdgeId e, VertexId v) const {
    const Edge& ed = edges_[e];
    return ed.tail == v ? ed.head : ed.tail;
  }

  // Distinct incident edges of v (an involutive edge filling two slots is
  // listed once).
  std::vector<EdgeId> incident_edges(VertexId v) const;

  // Breadth-first distances from `source` over all edges; kNone if unreachable.
  std::vector<std::uint32_t> distances_from(VertexId source) const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> boundary_;
  std::vector<std::uint32_t> slot_offsets_;
  std::vector<EdgeId> slot_edges_;
};

}  // namespace orbi

#endif  // ORBIFOREST_GROUP_GRAPH_HPP
