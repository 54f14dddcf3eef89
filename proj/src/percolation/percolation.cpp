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

#include "percolation/percolation.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "common/disjoint_sets.hpp"
#include "common/error.hpp"
#include "common/rng.hpp"

namespace orbi {

std::size_t BondConfig::count() const {
  return static_cast<std::size_t>(std::count(open.begin(), open.end(), std::uint8_t{1}));
}

bool BondConfig::is_subset_of(const BondConfig& other) const {
  if (other.size() != size()) return false;
  for (std::size_t e = 0; e < open.size(); ++e) {
    if (open[e] && !other.open[e]) return false;
  }
  return true;
}

BondConfig BondConfig::united_with(const BondConfig& other) const {
  if (other.size() != size()) fail(ErrorCode::kInvalidArgument, "bond configurations differ in size");
  BondConfig out = *this;
  for (std::size_t e = 0; e < open.size(); ++e) out.open[e] |= other.open[e];
  return out;
}

ClusterDecomposition::ClusterDecomposition(std::vector<VertexId> cluster_of,
                                           std::vector<ClusterStats> clusters)
    : cluster_of_(std::move(cluster_of)), clusters_(std::move(clusters)), slot_(cluster_of_.size(), kNone) {
  for (std::uint32_t i = 0; i < clusters_.size(); ++i) slot_[clusters_[i].id] = i;
}

std::vector<VertexId> ClusterDecomposition::members(VertexId id) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < cluster_of_.size(); ++v) {
    if (cluster_of_[v] == id) out.push_back(v);
  }
  return out;
}

LabelConfig sample_labels(std::size_t edge_count, std::uint64_t seed) {
  LabelConfig labels;
  labels.u.resize(edge_count);
  for (std::size_t e = 0; e < edge_count; ++e) labels.u[e] = counter_uniform(seed, e);
  return labels;
}

LabelConfig sample_labels(const Graph& graph, std::uint64_t seed) {
  return sample_labels(graph.edge_count(), seed);
}

BondConfig threshold(const LabelConfig& labels, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    fail(ErrorCode::kInvalidArgument, fmt::format("p = {} outside [0, 1]", p));
  }
  BondConfig bonds = BondConfig::empty(labels.size());
  for (std::size_t e = 0; e < labels.size(); ++e) bonds.open[e] = labels.u[e] <= p ? 1 : 0;
  return bonds;
}

BondConfig sample_bonds(const Graph& graph, double p, std::uint64_t seed) {
  return threshold(sample_labels(graph, seed), p);
}

BondConfig insert_edge(const BondConfig& bonds, EdgeId e) {
  if (e >= bonds.size()) fail(ErrorCode::kInvalidArgument, fmt::format("unknown edge id {}", e));
  BondConfig out = bonds;
  out.open[e] = 1;
  return out;
}

ClusterDecomposition decompose_clusters(const Graph& graph, const BondConfig& bonds) {
  if (bonds.size() != graph.edge_count()) {
    fail(ErrorCode::kInvalidArgument, "bond configuration does not match the graph");
  }
  const std::size_t n = graph.vertex_count();
  DisjointSets sets(n);
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    if (bonds.contains(e)) sets.unite(graph.edge(e).tail, graph.edge(e).head);
  }

  // Canonical id: the first (minimum) vertex seen for each root.
  std::vector<VertexId> root_to_id(n, kNone);
  std::vector<VertexId> cluster_of(n);
  for (VertexId v = 0; v < n; ++v) {
    const std::uint32_t r = sets.find(v);
    if (root_to_id[r] == kNone) root_to_id[r] = v;
    cluster_of[v] = root_to_id[r];
  }

  std::vector<std::uint32_t> slot(n, kNone);
  std::vector<ClusterStats> clusters;
  for (VertexId v = 0; v < n; ++v) {
    const VertexId id = cluster_of[v];
    if (slot[id] == kNone) {
      slot[id] = static_cast<std::uint32_t>(clusters.size());
      clusters.push_back(ClusterStats{id, 0, 0, false});
    }
    ClusterStats& c = clusters[slot[id]];
    ++c.size;
    c.touches_boundary = c.touches_boundary || graph.is_boundary(v);
  }
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    if (bonds.contains(e)) ++clusters[slot[cluster_of[graph.edge(e).tail]]].open_edges;
  }
  // Clusters were created in increasing id order already.
  return ClusterDecomposition(std::move(cluster_of), std::move(clusters));
}

ClusterView cluster_view(const Graph& graph, const BondConfig& bonds,
                         const ClusterDecomposition& decomposition, VertexId member) {
  ClusterView view;
  view.id = decomposition.cluster_id(member);
  view.vertices = decomposition.members(view.id);
  view.touches_boundary = decomposition.stats_of(member).touches_boundary;
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    if (bonds.contains(e) && decomposition.cluster_id(graph.edge(e).tail) == view.id) {
      view.open_edges.push_back(e);
    }
  }
  return view;
}

ClusterView origin_cluster(const Graph& graph, const BondConfig& bonds,
                           const ClusterDecomposition& decomposition) {
  return cluster_view(graph, bonds, decomposition, 0);
}

}  // namespace orbi
