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

#include "group/cayley.hpp"

#include <fmt/format.h>

#include "common/error.hpp"

namespace orbi {

CayleyBall CayleyBall::build(const GroupSpec& spec, const std::vector<std::string>& generators,
                             int radius, std::size_t vertex_cap) {
  if (radius < 0) fail(ErrorCode::kInvalidArgument, "radius must be >= 0");
  CayleyBall ball(Group(spec), radius);
  const Group& group = ball.group_;

  std::vector<std::string> words = generators;
  if (words.empty()) words = group.basis_letters();
  for (const std::string& w : words) {
    Generator g;
    g.label = w;
    g.element = group.normalize(w);
    if (g.element.is_identity()) {
      fail(ErrorCode::kInvalidArgument, fmt::format("generator '{}' is the identity", w));
    }
    g.inverse = group.inverse(g.element);
    g.involutive = g.inverse == g.element;
    ball.generators_.push_back(std::move(g));
  }
  const std::size_t k = ball.generators_.size();

  auto admit = [&](Element e, std::uint32_t length) {
    if (ball.elements_.size() >= vertex_cap) {
      fail(ErrorCode::kCapExceeded,
           fmt::format("ball of radius {} exceeds vertex cap {}", radius, vertex_cap));
    }
    const auto id = static_cast<VertexId>(ball.elements_.size());
    ball.index_.emplace(e, id);
    ball.elements_.push_back(std::move(e));
    ball.lengths_.push_back(length);
  };

  admit(group.identity(), 0);
  for (std::size_t head = 0; head < ball.elements_.size(); ++head) {
    const std::uint32_t length = ball.lengths_[head];
    if (static_cast<int>(length) >= radius) continue;
    for (int side = 0; side < 2; ++side) {
      for (std::size_t i = 0; i < k; ++i) {
        const Generator& g = ball.generators_[i];
        Element next = group.multiply(ball.elements_[head], side == 0 ? g.element : g.inverse);
        if (!ball.index_.count(next)) admit(std::move(next), length + 1);
      }
    }
  }

  const std::size_t n = ball.elements_.size();
  std::vector<Edge> edges;
  std::vector<EdgeId> out_edge(n * k, kNone);
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < k; ++i) {
      const Generator& g = ball.generators_[i];
      const auto head = ball.find(group.multiply(ball.elements_[v], g.element));
      if (!head) continue;
      if (g.involutive && *head < v) continue;  // recorded from the other endpoint
      const auto id = static_cast<EdgeId>(edges.size());
      edges.push_back(Edge{v, *head, static_cast<std::uint32_t>(i)});
      out_edge[v * k + i] = id;
      if (g.involutive) out_edge[*head * k + i] = id;
    }
  }

  std::vector<std::uint32_t> offsets(n + 1);
  std::vector<EdgeId> slots(n * 2 * k, kNone);
  std::vector<std::uint8_t> boundary(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    offsets[v + 1] = static_cast<std::uint32_t>((v + 1) * 2 * k);
    boundary[v] = static_cast<int>(ball.lengths_[v]) == radius ? 1 : 0;
    for (std::size_t i = 0; i < k; ++i) {
      const Generator& g = ball.generators_[i];
      slots[v * 2 * k + i] = out_edge[v * k + i];
      const auto tail = ball.find(group.multiply(ball.elements_[v], g.inverse));
      if (tail) slots[v * 2 * k + k + i] = out_edge[*tail * k + i];
    }
  }
  ball.graph_ = Graph(n, std::move(edges), std::move(boundary), std::move(offsets), std::move(slots));
  return ball;
}

std::optional<VertexId> CayleyBall::find(const Element& e) const {
  const auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexId> CayleyBall::left_translate(const Element& g, VertexId v) const {
  return find(group_.multiply(g, elements_[v]));
}

std::vector<EdgeOrbit> CayleyBall::edge_orbit_decomposition() const {
  std::vector<EdgeOrbit> out;
  out.reserve(graph_.edge_count());
  for (const Edge& e : graph_.edges()) out.push_back(EdgeOrbit{e.generator, e.tail});
  return out;
}

}  // namespace orbi
