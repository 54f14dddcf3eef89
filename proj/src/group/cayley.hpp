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

#ifndef ORBIFOREST_GROUP_CAYLEY_HPP
#define ORBIFOREST_GROUP_CAYLEY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "group/graph.hpp"
#include "group/group.hpp"

namespace orbi {

inline constexpr std::size_t kDefaultVertexCap = 2'000'000;

struct Generator {
  std::string label;
  Element element;
  Element inverse;
  bool involutive = false;
};

struct EdgeOrbit {
  std::uint32_t generator;
  VertexId tail;
};

// Radius-R ball of the right Cayley graph around the identity.
//
// Vertices are indexed in BFS order from the identity, neighbours explored
// through S then S^-1 in multiset order, so vertex index order is the
// length-then-generator enumeration. Edge (g, s) is oriented g -> gs and kept
// when both endpoints lie in the ball; involutive generators produce one
// undirected edge that fills both the s and s^-1 slot at each endpoint.
class CayleyBall {
 public:
  // `generators` are words over the basis letters; empty selects one
  // generator per basis letter. Throws kCapExceeded naming the cap.
  static CayleyBall build(const GroupSpec& spec, const std::vector<std::string>& generators,
                          int radius, std::size_t vertex_cap = kDefaultVertexCap);

  const Group& group() const { return group_; }
  const Graph& graph() const { return graph_; }
  int radius() const { return radius_; }
  std::size_t degree() const { return 2 * generators_.size(); }
  std::span<const Generator> generators() const { return generators_; }

  std::size_t vertex_count() const { return elements_.size(); }
  const Element& element(VertexId v) const { return elements_[v]; }
  std::uint32_t word_length(VertexId v) const { return lengths_[v]; }
  std::string vertex_label(VertexId v) const { return group_.format(elements_[v]); }

  std::optional<VertexId> find(const Element& e) const;

  // Vertex of g.v, or nullopt when g.v falls outside the ball.
  std::optional<VertexId> left_translate(const Element& g, VertexId v) const;

  // Edge id -> (generator, tail). Injective; over interior tails this is the
  // identification of the edge set with one copy of the group per generator.
  std::vector<EdgeOrbit> edge_orbit_decomposition() const;

 private:
  CayleyBall(Group group, int radius) : group_(std::move(group)), radius_(radius) {}

  Group group_;
  int radius_ = 0;
  std::vector<Generator> generators_;
  std::vector<Element> elements_;
  std::vector<std::uint32_t> lengths_;
  std::unordered_map<Element, VertexId, ElementHash> index_;
  Graph graph_;
};

}  // namespace orbi

#endif  // ORBIFOREST_GROUP_CAYLEY_HPP
