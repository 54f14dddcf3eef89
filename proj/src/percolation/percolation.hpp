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

#ifndef ORBIFOREST_PERCOLATION_PERCOLATION_HPP
#define ORBIFOREST_PERCOLATION_PERCOLATION_HPP

#include <cstdint>
#include <vector>

#include "group/graph.hpp"

namespace orbi {

// u : edge -> (0, 1]. Comparisons between labels are totalized by edge id.
struct LabelConfig {
  std::vector<double> u;

  std::size_t size() const { return u.size(); }
  bool less(EdgeId a, EdgeId b) const { return u[a] < u[b] || (u[a] == u[b] && a < b); }
};

// omega : edge -> {0, 1}, i.e. a spanning subgraph of the ball.
struct BondConfig {
  std::vector<std::uint8_t> open;

  static BondConfig empty(std::size_t edges) { return BondConfig{std::vector<std::uint8_t>(edges, 0)}; }
  static BondConfig full(std::size_t edges) { return BondConfig{std::vector<std::uint8_t>(edges, 1)}; }

  std::size_t size() const { return open.size(); }
  bool contains(EdgeId e) const { return open[e] != 0; }
  std::size_t count() const;
  bool is_subset_of(const BondConfig& other) const;
  BondConfig united_with(const BondConfig& other) const;

  friend bool operator==(const BondConfig&, const BondConfig&) = default;
};

struct ClusterStats {
  VertexId id;  // minimum vertex index in the cluster
  std::uint32_t size;
  std::uint32_t open_edges;
  bool touches_boundary;
};

class ClusterDecomposition {
 public:
  ClusterDecomposition(std::vector<VertexId> cluster_of, std::vector<ClusterStats> clusters);

  VertexId cluster_id(VertexId v) const { return cluster_of_[v]; }
  const std::vector<VertexId>& cluster_ids() const { return cluster_of_; }
  // Sorted by id.
  const std::vector<ClusterStats>& clusters() const { return clusters_; }
  const ClusterStats& stats_of(VertexId v) const { return clusters_[slot_[cluster_of_[v]]]; }
  std::vector<VertexId> members(VertexId id) const;

 private:
  std::vector<VertexId> cluster_of_;
  std::vector<ClusterStats> clusters_;
  std::vector<std::uint32_t> slot_;  // cluster id -> index into clusters_
};

struct ClusterView {
  VertexId id;
  std::vector<VertexId> vertices;
  std::vector<EdgeId> open_edges;
  bool touches_boundary;
};

// i.i.d. uniform labels, u(e) = counter_uniform(seed, e).
LabelConfig sample_labels(const Graph& graph, std::uint64_t seed);
LabelConfig sample_labels(std::size_t edge_count, std::uint64_t seed);

// omega(e) = 1 iff u(e) <= p. Throws kInvalidArgument for p outside [0, 1].
BondConfig threshold(const LabelConfig& labels, double p);

BondConfig sample_bonds(const Graph& graph, double p, std::uint64_t seed);

// omega with e opened. Throws kInvalidArgument for an unknown edge id.
BondConfig insert_edge(const BondConfig& bonds, EdgeId e);

ClusterDecomposition decompose_clusters(const Graph& graph, const BondConfig& bonds);

// Cluster of vertex 0 (the identity in a Cayley ball).
ClusterView origin_cluster(const Graph& graph, const BondConfig& bonds,
                           const ClusterDecomposition& decomposition);

ClusterView cluster_view(const Graph& graph, const BondConfig& bonds,
                         const ClusterDecomposition& decomposition, VertexId member);

}  // namespace orbi

#endif  // ORBIFOREST_PERCOLATION_PERCOLATION_HPP
