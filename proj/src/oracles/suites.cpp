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

#include "oracles/suites.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <fmt/format.h>

#include "common/error.hpp"
#include "forest/msf.hpp"
#include "forest/structure.hpp"
#include "forest/wilson.hpp"
#include "group/cayley.hpp"
#include "oracles/oracles.hpp"
#include "percolation/percolation.hpp"

namespace orbi::oracle {
namespace {

void fail_case(SuiteResult& r, const std::string& what) {
  if (r.passed) r.detail = what;
  r.passed = false;
}

BondConfig random_bonds(Rng& rng, std::size_t edges, double p) {
  BondConfig b = BondConfig::empty(edges);
  for (std::size_t e = 0; e < edges; ++e) b.open[e] = rng.uniform() < p ? 1 : 0;
  return b;
}

LabelConfig random_labels(Rng& rng, std::size_t edges) {
  LabelConfig labels;
  for (std::size_t e = 0; e < edges; ++e) labels.u.push_back(rng.uniform());
  return labels;
}

std::size_t tree_index(const std::vector<BondConfig>& trees, const BondConfig& forest) {
  const auto it = std::lower_bound(trees.begin(), trees.end(), forest,
                                   [](const BondConfig& a, const BondConfig& b) { return a.open < b.open; });
  return it != trees.end() && *it == forest ? static_cast<std::size_t>(it - trees.begin()) : kNone;
}

}  // namespace

Graph random_graph(Rng& rng, std::size_t vertices, double edge_probability, bool connected, bool parallel) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (connected) {
    for (VertexId v = 1; v < vertices; ++v) edges.emplace_back(static_cast<VertexId>(rng.below(v)), v);
  }
  for (VertexId a = 0; a < vertices; ++a) {
    for (VertexId b = a + 1; b < vertices; ++b) {
      const bool present = std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
      if (present && !parallel) continue;
      if (rng.uniform() < edge_probability) edges.emplace_back(a, b);
    }
  }
  // Shuffle so edge ids carry no structure.
  for (std::size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[rng.below(i)]);
  return Graph::from_edges(vertices, edges);
}

Graph complete_graph(std::size_t vertices) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId a = 0; a < vertices; ++a) {
    for (VertexId b = a + 1; b < vertices; ++b) edges.emplace_back(a, b);
  }
  return Graph::from_edges(vertices, edges);
}

SuiteResult suite_clusters(std::uint64_t seed, std::size_t instances) {
  SuiteResult r{"clusters-vs-bfs", true, 0, {}};
  Rng rng(derive_seed(seed, "suite-clusters"));
  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t n = 1 + rng.below(10);
    Graph shape = random_graph(rng, n, 0.3, false, true);
    std::vector<std::uint8_t> boundary(n);
    for (auto& b : boundary) b = rng.uniform() < 0.3 ? 1 : 0;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (const Edge& e : shape.edges()) pairs.emplace_back(e.tail, e.head);
    const Graph g = Graph::from_edges(n, pairs, boundary);
    const BondConfig bonds = random_bonds(rng, g.edge_count(), rng.uniform());
    const auto dec = decompose_clusters(g, bonds);
    const auto expected = bfs_components(g, bonds);
    ++r.cases;
    if (dec.cluster_ids() != expected) {
      fail_case(r, fmt::format("instance {}: cluster ids differ from BFS", i));
      continue;
    }
    for (const ClusterStats& c : dec.clusters()) {
      std::uint32_t size = 0, open = 0;
      bool touches = false;
      for (VertexId v = 0; v < n; ++v) {
        if (expected[v] != c.id) continue;
        ++size;
        touches = touches || g.is_boundary(v);
      }
      for (EdgeId e = 0; e < g.edge_count(); ++e) open += bonds.contains(e) && expected[g.edge(e).tail] == c.id;
      if (size != c.size || open != c.open_edges || touches != c.touches_boundary) {
        fail_case(r, fmt::format("instance {}: stats of cluster {} differ", i, c.id));
      }
    }
  }
  if (r.passed) r.detail = fmt::format("{} random graphs match", r.cases);
  return r;
}

SuiteResult suite_msf(std::uint64_t seed, std::size_t instances) {
  SuiteResult r{"msf-vs-cycle-deletion", true, 0, {}};
  Rng rng(derive_seed(seed, "suite-msf"));
  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t n = 2 + rng.below(9);
    const Graph g = random_graph(rng, n, 0.35, true, rng.uniform() < 0.2);
    const BondConfig all = BondConfig::full(g.edge_count());
    LabelConfig labels = random_labels(rng, g.edge_count());
    if (i % 10 == 0 && g.edge_count() > 1) labels.u[1] = labels.u[0];  // exercise the tie-break
    const ForestConfig kruskal = msf_cycle_deletion(g, all, labels);
    const BondConfig brute = cycle_max_deletion(g, all, labels);
    ++r.cases;
    if (!(kruskal.edges == brute)) fail_case(r, fmt::format("instance {} ({} vertices): Kruskal differs", i, n));
  }
  if (r.passed) r.detail = fmt::format("{} random connected graphs match exactly", r.cases);
  return r;
}

SuiteResult suite_msf_cut_duality(std::uint64_t seed, std::size_t instances) {
  SuiteResult r{"msf-cut-duality", true, 0, {}};
  Rng rng(derive_seed(seed, "suite-msf-cut"));
  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t n = 1 + rng.below(8);
    const Graph g = random_graph(rng, n, 0.45, false, true);
    const BondConfig sub = random_bonds(rng, g.edge_count(), 0.8);
    const LabelConfig labels = random_labels(rng, g.edge_count());
    ++r.cases;
    if (!(msf_cycle_deletion(g, sub, labels).edges == cut_min_edges(g, sub, labels))) {
      fail_case(r, fmt::format("instance {}: cut characterization differs", i));
    }
  }
  if (r.passed) r.detail = fmt::format("{} graphs of <= 8 vertices", r.cases);
  return r;
}

SuiteResult suite_blocks(std::uint64_t seed, std::size_t instances) {
  SuiteResult r{"blocks-vs-brute-force", true, 0, {}};
  Rng rng(derive_seed(seed, "suite-blocks"));
  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t n = 1 + rng.below(9);
    const Graph g = random_graph(rng, n, 0.35, false, rng.uniform() < 0.2);
    const BondConfig sub = random_bonds(rng, g.edge_count(), 0.85);
    const BlockReport report = blocks(g, sub);
    auto got = report.blocks;
    std::sort(got.begin(), got.end());
    ++r.cases;
    if (got != blocks_by_cycles(g, sub)) {
      fail_case(r, fmt::format("instance {}: blocks differ", i));
      continue;
    }
    if (report.cutvertices != cutvertices_by_removal(g, sub)) {
      fail_case(r, fmt::format("instance {}: cutvertices differ", i));
      continue;
    }
    // Every open edge lies in exactly one block.
    std::vector<int> owners(g.edge_count(), 0);
    for (const auto& be : report.block_edges) {
      for (EdgeId e : be) ++owners[e];
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (owners[e] != (sub.contains(e) ? 1 : 0)) fail_case(r, fmt::format("instance {}: edge {} in {} blocks", i, e, owners[e]));
    }
  }
  if (r.passed) r.detail = fmt::format("{} random graphs of <= 9 vertices", r.cases);
  return r;
}

SuiteResult suite_paths(std::uint64_t seed, std::size_t instances) {
  SuiteResult r{"simple-paths", true, 0, {}};
  const Graph k4 = complete_graph(4);
  const BondConfig k4_all = BondConfig::full(k4.edge_count());
  ++r.cases;
  if (count_simple_paths(k4, k4_all, 0, 1, 3, 1'000'000).count != 5) fail_case(r, "K4 adjacent pair, max_len 3: expected 5");
  ++r.cases;
  if (count_simple_paths(k4, k4_all, 2, 2, 3, 1'000'000).count != 1) fail_case(r, "a == b must count one path");
  Rng rng(derive_seed(seed, "suite-paths"));
  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t n = 2 + rng.below(7);
    const Graph g = random_graph(rng, n, 0.5, false, rng.uniform() < 0.2);
    const BondConfig sub = random_bonds(rng, g.edge_count(), 0.9);
    const VertexId a = static_cast<VertexId>(rng.below(n));
    const VertexId b = static_cast<VertexId>(rng.below(n));
    const auto max_len = static_cast<std::uint32_t>(1 + rng.below(n));
    ++r.cases;
    const std::uint64_t expected = a == b ? 1 : simple_paths(g, sub, a, b, max_len);
    const PathCount got = count_simple_paths(g, sub, a, b, max_len, 1'000'000);
    if (got.count != expected || got.saturated) {
      fail_case(r, fmt::format("instance {}: {} paths, oracle {}", i, got.count, expected));
    }
    if (expected > 1) {
      const PathCount capped = count_simple_paths(g, sub, a, b, max_len, expected - 1);
      if (!capped.saturated || capped.count != expected - 1) fail_case(r, fmt::format("instance {}: cap not honoured", i));
    }
  }
  // Cycles through a simple path a1..an: the lower bound n - 1 holds.
  for (std::size_t n = 3; n <= 7; ++n) {
    std::vector<std::pair<VertexId, VertexId>> cycle;
    for (VertexId v = 0; v < n; ++v) cycle.emplace_back(v, static_cast<VertexId>((v + 1) % n));
    const Graph g = Graph::from_edges(n, cycle);
    ++r.cases;
    const PathCount c = count_simple_paths(g, BondConfig::full(n), 0, 1, static_cast<std::uint32_t>(n), 1'000'000);
    if (c.count < 1 || c.count != simple_paths(g, BondConfig::full(n), 0, 1, static_cast<std::uint32_t>(n))) {
      fail_case(r, fmt::format("cycle C{}: unexpected count {}", n, c.count));
    }
  }
  if (r.passed) r.detail = fmt::format("{} counts match exhaustive DFS", r.cases);
  return r;
}

SuiteResult suite_matrix_tree(std::uint64_t seed, std::size_t instances) {
  SuiteResult r{"matrix-tree", true, 0, {}};
  ++r.cases;
  if (matrix_tree_count(complete_graph(4)) != 16) fail_case(r, "K4 must have 16 spanning trees");
  Rng rng(derive_seed(seed, "suite-matrix-tree"));
  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t n = 2 + rng.below(5);
    Graph shape = random_graph(rng, n, 0.5, true, true);
    std::vector<std::uint8_t> boundary(n, 0);
    if (rng.uniform() < 0.5) {
      for (auto& b : boundary) b = rng.uniform() < 0.3 ? 1 : 0;
    }
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (const Edge& e : shape.edges()) pairs.emplace_back(e.tail, e.head);
    if (pairs.size() > 16) pairs.resize(16);
    const Graph g = Graph::from_edges(n, pairs, boundary);
    ++r.cases;
    const auto forests = wired_spanning_forests(g);
    if (forests.size() != matrix_tree_count(g)) {
      fail_case(r, fmt::format("instance {}: {} enumerated vs {} by determinant", i, forests.size(), matrix_tree_count(g)));
    }
  }
  if (r.passed) r.detail = fmt::format("{} graphs; K4 = 16", r.cases);
  return r;
}

SuiteResult suite_pop_orders(std::uint64_t seed, std::size_t instances) {
  SuiteResult r{"cycle-popping-order", true, 0, {}};
  // Triangle 1-2-3 with root 0 attached to 1 and 2.
  const Graph g = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 1}, {0, 1}, {0, 2}}, {1, 0, 0, 0});
  const std::vector<VertexId> roots{0};
  std::uint64_t explored_total = 0;
  for (std::size_t i = 0; i < instances; ++i) {
    const StackOracle oracle(derive_seed(seed, "suite-pop-orders", {i}));
    auto arrow = [&](VertexId v, std::uint64_t depth) {
      const auto slots = g.slots(v);
      return slots[h_index(oracle(depth, v), static_cast<int>(slots.size())) - 1];
    };
    std::uint64_t explored = 0;
    const auto outcomes = all_pop_orders(g, roots, arrow, 10'000, &explored);
    explored_total += explored;
    const ForestConfig popped = wilson_stacks(g, oracle);
    ++r.cases;
    if (outcomes.size() != 1) {
      fail_case(r, fmt::format("oracle {}: {} distinct outcomes over pop orders", i, outcomes.size()));
    } else if (outcomes[0].parent_edge != popped.parent_edge) {
      fail_case(r, fmt::format("oracle {}: wilson_stacks differs from exhaustive popping", i));
    }
  }
  if (r.passed) r.detail = fmt::format("{} oracles, {} popping states explored", r.cases, explored_total);
  return r;
}

SuiteResult suite_group(std::uint64_t seed, std::size_t pairs) {
  SuiteResult r{"normal-form-homomorphism", true, 0, {}};
  const std::vector<GroupSpec> catalog = {
      GroupSpec::free(2), GroupSpec::free_abelian(3), GroupSpec::free_product_cyclic({2, 3, kInfiniteOrder}),
      GroupSpec::product_with_z(GroupSpec::free(2))};
  Rng rng(derive_seed(seed, "suite-group"));
  for (const GroupSpec& spec : catalog) {
    const Group group(spec);
    const auto letters = group.basis_letters();
    auto random_word = [&] {
      std::string w;
      const std::size_t len = rng.below(7);
      for (std::size_t k = 0; k < len; ++k) {
        const auto exp = static_cast<int>(rng.below(5)) - 2;
        w += fmt::format("{}^{} ", letters[rng.below(letters.size())], exp == 0 ? 1 : exp);
      }
      return w;
    };
    for (std::size_t i = 0; i < pairs; ++i) {
      const std::string u = random_word(), v = random_word();
      const Element nu = group.normalize(u), nv = group.normalize(v);
      const Element uv = group.normalize(u + " " + v);
      ++r.cases;
      if (!(uv == group.multiply(nu, nv))) fail_case(r, fmt::format("{}: normalize('{} {}') is not the product", spec.describe(), u, v));
      if (!(group.normalize(group.format(uv)) == uv)) fail_case(r, fmt::format("{}: format round trip fails", spec.describe()));
      if (!group.multiply(uv, group.inverse(uv)).is_identity()) fail_case(r, fmt::format("{}: inverse fails", spec.describe()));
    }
  }
  if (r.passed) r.detail = fmt::format("{} word pairs over 4 groups", r.cases);
  return r;
}

SuiteResult suite_ball_counts() {
  SuiteResult r{"ball-vertex-counts", true, 0, {}};
  for (int k = 2; k <= 3; ++k) {
    for (int radius = 0; radius <= (k == 2 ? 8 : 6); ++radius) {
      const CayleyBall ball = CayleyBall::build(GroupSpec::free(k), {}, radius);
      const double q = 2.0 * k - 1.0;
      const auto expected = static_cast<std::size_t>(std::llround(1.0 + 2.0 * k * (std::pow(q, radius) - 1.0) / (q - 1.0)));
      ++r.cases;
      if (ball.vertex_count() != expected) {
        fail_case(r, fmt::format("free({}) radius {}: {} vertices, expected {}", k, radius, ball.vertex_count(), expected));
      }
    }
  }
  for (int radius = 0; radius <= 10; ++radius) {
    const CayleyBall ball = CayleyBall::build(GroupSpec::free_abelian(2), {}, radius);
    ++r.cases;
    if (ball.vertex_count() != static_cast<std::size_t>(2 * radius * radius + 2 * radius + 1)) {
      fail_case(r, fmt::format("Z^2 radius {}: {} vertices", radius, ball.vertex_count()));
    }
  }
  if (r.passed) r.detail = fmt::format("{} radii match closed forms", r.cases);
  return r;
}

SuiteResult suite_tree_percolation(std::uint64_t seed, std::size_t trials) {
  SuiteResult r{"tree-one-arm", true, 0, {}};
  const int radius = 6;
  const CayleyBall ball = CayleyBall::build(GroupSpec::free(2), {}, radius);
  for (double p : {0.3, 0.5, 0.7}) {
    std::size_t hits = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const BondConfig bonds = sample_bonds(ball.graph(), p, derive_seed(seed, "suite-tree", {t}));
      hits += decompose_clusters(ball.graph(), bonds).stats_of(0).touches_boundary ? 1 : 0;
    }
    const double exact = tree_one_arm(4, radius, p);
    const double est = static_cast<double>(hits) / static_cast<double>(trials);
    const double sigma = std::sqrt(exact * (1.0 - exact) / static_cast<double>(trials));
    ++r.cases;
    if (std::abs(est - exact) > 4.0 * sigma) {
      fail_case(r, fmt::format("p = {}: estimate {} vs exact {} (sigma {})", p, est, exact, sigma));
    }
  }
  if (r.passed) r.detail = fmt::format("free(2) radius {} within 4 sigma of the recursion", radius);
  return r;
}

WilsonUniformity wilson_uniformity(const Graph& graph, std::uint64_t seed, std::size_t runs) {
  WilsonUniformity out;
  auto trees = wired_spanning_forests(graph);
  std::sort(trees.begin(), trees.end(), [](const BondConfig& a, const BondConfig& b) { return a.open < b.open; });
  out.trees = matrix_tree_count(graph);
  out.lerw_counts.assign(trees.size(), 0);
  out.stack_counts.assign(trees.size(), 0);
  out.all_outputs_valid = trees.size() == out.trees;
  for (std::size_t i = 0; i < runs; ++i) {
    const std::size_t a = tree_index(trees, wilson_wired(graph, derive_seed(seed, "uniformity-lerw", {i})).edges);
    const std::size_t b =
        tree_index(trees, wilson_stacks(graph, StackOracle(derive_seed(seed, "uniformity-stacks", {i}))).edges);
    if (a == kNone || b == kNone) {
      out.all_outputs_valid = false;
      continue;
    }
    ++out.lerw_counts[a];
    ++out.stack_counts[b];
  }
  const std::vector<double> uniform(trees.size(), 1.0 / static_cast<double>(trees.size()));
  if (trees.size() >= 2) {
    out.lerw_p = chi2_goodness_of_fit(out.lerw_counts, uniform);
    out.stack_p = chi2_goodness_of_fit(out.stack_counts, uniform);
    out.two_sample_p = chi2_two_sample(out.lerw_counts, out.stack_counts);
  }
  const double mean = static_cast<double>(runs) / static_cast<double>(trees.size());
  const double sigma = std::sqrt(mean * (1.0 - 1.0 / static_cast<double>(trees.size())));
  auto within = [&](const std::vector<std::uint64_t>& counts) {
    return std::all_of(counts.begin(), counts.end(),
                       [&](std::uint64_t c) { return std::abs(static_cast<double>(c) - mean) <= 3.0 * sigma; });
  };
  out.lerw_within_3sigma = within(out.lerw_counts);
  out.stack_within_3sigma = within(out.stack_counts);
  return out;
}

SuiteResult suite_wilson(std::uint64_t seed, std::size_t runs) {
  SuiteResult r{"wilson-uniformity", true, 0, {}};
  const WilsonUniformity u = wilson_uniformity(complete_graph(4), seed, runs);
  r.cases = runs;
  if (u.trees != 16) fail_case(r, fmt::format("K4 matrix-tree count {}", u.trees));
  if (!u.all_outputs_valid) fail_case(r, "a sampled forest is not a wired spanning forest");
  if (u.lerw_p <= 0.01) fail_case(r, fmt::format("loop-erased walk chi2 p = {}", u.lerw_p));
  if (u.stack_p <= 0.01) fail_case(r, fmt::format("stacks chi2 p = {}", u.stack_p));
  if (u.two_sample_p <= 0.01) fail_case(r, fmt::format("two-sample chi2 p = {}", u.two_sample_p));
  if (r.passed) {
    r.detail = fmt::format("K4, {} runs: p = {:.3f} (walk), {:.3f} (stacks), {:.3f} (two-sample)", runs, u.lerw_p,
                           u.stack_p, u.two_sample_p);
  }
  return r;
}

std::vector<SuiteResult> run_selftest(std::uint64_t seed) {
  std::vector<SuiteResult> out;
  auto guarded = [&](auto&& fn) {
    try {
      out.push_back(fn());
    } catch (const std::exception& e) {
      out.push_back(SuiteResult{"exception", false, 0, e.what()});
    }
  };
  guarded([&] { return suite_group(seed, 2'500); });
  guarded([&] { return suite_ball_counts(); });
  guarded([&] { return suite_clusters(seed, 200); });
  guarded([&] { return suite_tree_percolation(seed, 2'000); });
  guarded([&] { return suite_msf(seed, 200); });
  guarded([&] { return suite_msf_cut_duality(seed, 200); });
  guarded([&] { return suite_blocks(seed, 200); });
  guarded([&] { return suite_paths(seed, 200); });
  guarded([&] { return suite_matrix_tree(seed, 100); });
  guarded([&] { return suite_pop_orders(seed, 50); });
  guarded([&] { return suite_wilson(seed, 32'000); });
  return out;
}

}  // namespace orbi::oracle
