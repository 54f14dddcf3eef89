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

#include "forest/structure.hpp"

#include <algorithm>
#include <deque>

#include <fmt/format.h>

#include "common/disjoint_sets.hpp"
#include "common/error.hpp"

namespace orbi {
namespace {

struct Arc {
  EdgeId edge;
  VertexId to;
};

// Open adjacency in CSR form, each undirected edge once per endpoint.
struct OpenAdjacency {
  std::vector<std::uint32_t> offsets;
  std::vector<Arc> arcs;

  OpenAdjacency(const Graph& graph, const BondConfig& subgraph) : offsets(graph.vertex_count() + 1, 0) {
    if (subgraph.size() != graph.edge_count()) {
      fail(ErrorCode::kInvalidArgument, "subgraph does not match the graph");
    }
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
      if (!subgraph.contains(e)) continue;
      ++offsets[graph.edge(e).tail + 1];
      ++offsets[graph.edge(e).head + 1];
    }
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) offsets[v + 1] += offsets[v];
    arcs.resize(offsets.back());
    std::vector<std::uint32_t> fill(offsets.begin(), offsets.end() - 1);
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
      if (!subgraph.contains(e)) continue;
      const Edge& ed = graph.edge(e);
      arcs[fill[ed.tail]++] = Arc{e, ed.head};
      arcs[fill[ed.head]++] = Arc{e, ed.tail};
    }
  }

  std::uint32_t begin(VertexId v) const { return offsets[v]; }
  std::uint32_t end(VertexId v) const { return offsets[v + 1]; }
};

void finish_block(const Graph& graph, std::vector<EdgeId> edges, BlockReport& report) {
  std::vector<VertexId> vertices;
  for (EdgeId e : edges) {
    vertices.push_back(graph.edge(e).tail);
    vertices.push_back(graph.edge(e).head);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::sort(edges.begin(), edges.end());
  report.blocks.push_back(std::move(vertices));
  report.block_edges.push_back(std::move(edges));
}

}  // namespace

BlockReport blocks(const Graph& graph, const BondConfig& subgraph) {
  const OpenAdjacency adj(graph, subgraph);
  const std::size_t n = graph.vertex_count();
  BlockReport report;

  std::vector<std::uint32_t> disc(n, kNone);
  std::vector<std::uint32_t> low(n, 0);
  std::uint32_t timer = 0;

  struct Frame {
    VertexId v;
    EdgeId via;          // edge from the DFS parent, kNone at the root
    std::uint32_t next;  // next arc to examine
  };
  std::vector<Frame> frames;
  std::vector<EdgeId> edge_stack;

  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != kNone) continue;
    disc[root] = low[root] = timer++;
    if (adj.begin(root) == adj.end(root)) {
      report.blocks.push_back({root});
      report.block_edges.emplace_back();
      continue;
    }
    frames.push_back(Frame{root, kNone, adj.begin(root)});
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < adj.end(f.v)) {
        const Arc arc = adj.arcs[f.next++];
        if (arc.edge == f.via) continue;  // parallel edges are distinct arcs
        if (disc[arc.to] == kNone) {
          disc[arc.to] = low[arc.to] = timer++;
          edge_stack.push_back(arc.edge);
          frames.push_back(Frame{arc.to, arc.edge, adj.begin(arc.to)});
        } else if (disc[arc.to] < disc[f.v]) {
          edge_stack.push_back(arc.edge);  // back edge
          low[f.v] = std::min(low[f.v], disc[arc.to]);
        }
        continue;
      }
      const Frame done = f;
      frames.pop_back();
      if (frames.empty()) break;
      const VertexId parent = frames.back().v;
      low[parent] = std::min(low[parent], low[done.v]);
      if (low[done.v] >= disc[parent]) {
        std::vector<EdgeId> block;
        for (;;) {
          const EdgeId e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == done.via) break;
        }
        finish_block(graph, std::move(block), report);
      }
    }
  }

  std::vector<std::uint32_t> membership(n, 0);
  std::vector<std::size_t> sizes;
  for (const auto& b : report.blocks) {
    for (VertexId v : b) ++membership[v];
    sizes.push_back(b.size());
    report.max_block_size = std::max(report.max_block_size, b.size());
    ++report.histogram[b.size()];
  }
  for (VertexId v = 0; v < n; ++v) {
    if (membership[v] >= 2) report.cutvertices.push_back(v);
  }
  if (!sizes.empty()) {
    std::sort(sizes.begin(), sizes.end());
    const std::size_t m = sizes.size();
    report.median_block_size = m % 2 == 1 ? static_cast<double>(sizes[m / 2])
                                          : 0.5 * static_cast<double>(sizes[m / 2 - 1] + sizes[m / 2]);
  }
  return report;
}

PathCount count_simple_paths(const Graph& graph, const BondConfig& subgraph, VertexId a,
                             VertexId b, std::uint32_t max_len, std::uint64_t cap) {
  if (a >= graph.vertex_count() || b >= graph.vertex_count()) {
    fail(ErrorCode::kInvalidArgument, fmt::format("path endpoints ({}, {}) out of range", a, b));
  }
  if (cap < 1) fail(ErrorCode::kInvalidArgument, "path cap must be >= 1");
  PathCount result;
  if (a == b) {
    result.count = 1;
    return result;
  }
  const OpenAdjacency adj(graph, subgraph);
  std::vector<std::uint8_t> on_path(graph.vertex_count(), 0);

  struct Frame {
    VertexId v;
    std::uint32_t next;
  };
  std::vector<Frame> frames{{a, adj.begin(a)}};
  on_path[a] = 1;
  while (!frames.empty()) {
    Frame& f = frames.back();
    if (f.next == adj.end(f.v) || frames.size() > max_len) {
      on_path[f.v] = 0;
      frames.pop_back();
      continue;
    }
    const Arc arc = adj.arcs[f.next++];
    if (on_path[arc.to]) continue;
    if (arc.to == b) {
      if (++result.count >= cap) {
        result.count = cap;
        result.saturated = true;
        return result;
      }
      continue;
    }
    on_path[arc.to] = 1;
    frames.push_back(Frame{arc.to, adj.begin(arc.to)});
  }
  return result;
}

EndsProfile ends_profile(const Graph& graph, const BondConfig& subgraph,
                         const std::vector<VertexId>& cluster, VertexId center,
                         const std::vector<std::uint32_t>& radii, std::uint32_t radius_limit) {
  if (std::find(cluster.begin(), cluster.end(), center) == cluster.end()) {
    fail(ErrorCode::kInvalidArgument, fmt::format("center {} is not in the cluster", center));
  }
  for (std::uint32_t r : radii) {
    if (r >= radius_limit) {
      fail(ErrorCode::kInvalidArgument, fmt::format("ends radius {} must be < {}", r, radius_limit));
    }
  }
  const auto dist = graph.distances_from(center);
  std::vector<std::uint8_t> in_cluster(graph.vertex_count(), 0);
  for (VertexId v : cluster) in_cluster[v] = 1;

  EndsProfile profile;
  profile.radii = radii;
  for (std::uint32_t r : radii) {
    auto kept = [&](VertexId v) { return in_cluster[v] && dist[v] != kNone && dist[v] >= r; };
    DisjointSets sets(graph.vertex_count());
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
      const Edge& ed = graph.edge(e);
      if (subgraph.contains(e) && kept(ed.tail) && kept(ed.head)) sets.unite(ed.tail, ed.head);
    }
    std::vector<std::uint8_t> counted(graph.vertex_count(), 0);
    std::uint32_t count = 0;
    for (VertexId v : cluster) {
      if (!kept(v) || !graph.is_boundary(v)) continue;
      const std::uint32_t root = sets.find(v);
      if (!counted[root]) {
        counted[root] = 1;
        ++count;
      }
    }
    profile.counts.push_back(count);
  }
  return profile;
}

}  // namespace orbi
