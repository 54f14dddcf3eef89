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

#include "group/graph.hpp"

#include <algorithm>
#include <deque>

#include <fmt/format.h>

#include "common/error.hpp"

namespace orbi {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::uint8_t> boundary,
             std::vector<std::uint32_t> slot_offsets, std::vector<EdgeId> slot_edges)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      boundary_(std::move(boundary)),
      slot_offsets_(std::move(slot_offsets)),
      slot_edges_(std::move(slot_edges)) {
  if (slot_offsets_.size() != vertex_count_ + 1) {
    fail(ErrorCode::kInternal, "slot offsets do not match vertex count");
  }
  if (!boundary_.empty() && boundary_.size() != vertex_count_) {
    fail(ErrorCode::kInvalidArgument, "boundary flags do not match vertex count");
  }
}

Graph Graph::from_edges(std::size_t vertex_count,
                        const std::vector<std::pair<VertexId, VertexId>>& edges,
                        std::vector<std::uint8_t> boundary) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  std::vector<std::uint32_t> degree(vertex_count + 1, 0);
  for (auto [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count) {
      fail(ErrorCode::kInvalidArgument, fmt::format("edge ({}, {}) out of range", a, b));
    }
    if (a == b) fail(ErrorCode::kInvalidArgument, fmt::format("loop at vertex {}", a));
    list.push_back(Edge{a, b, 0});
    ++degree[a + 1];
    ++degree[b + 1];
  }
  for (std::size_t v = 0; v < vertex_count; ++v) degree[v + 1] += degree[v];
  std::vector<EdgeId> slots(degree.back());
  std::vector<std::uint32_t> fill(degree.begin(), degree.end() - 1);
  for (EdgeId e = 0; e < list.size(); ++e) {
    slots[fill[list[e].tail]++] = e;
    slots[fill[list[e].head]++] = e;
  }
  return Graph(vertex_count, std::move(list), std::move(boundary), std::move(degree),
               std::move(slots));
}

bool Graph::has_boundary() const {
  return std::any_of(boundary_.begin(), boundary_.end(), [](std::uint8_t b) { return b != 0; });
}

std::vector<VertexId> Graph::boundary_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < boundary_.size(); ++v) {
    if (boundary_[v]) out.push_back(v);
  }
  return out;
}

std::vector<EdgeId> Graph::incident_edges(VertexId v) const {
  std::vector<EdgeId> out;
  for (EdgeId e : slots(v)) {
    if (e != kNone && std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  }
  return out;
}

std::vector<std::uint32_t> Graph::distances_from(VertexId source) const {
  std::vector<std::uint32_t> dist(vertex_count_, kNone);
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : slots(v)) {
      if (e == kNone) continue;
      const VertexId w = other(e, v);
      if (dist[w] == kNone) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace orbi
