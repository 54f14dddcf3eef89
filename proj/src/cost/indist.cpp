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

#include "cost/indist.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/binomial.hpp>
#include <fmt/format.h>

#include "common/error.hpp"
#include "common/rng.hpp"

namespace orbi {
namespace {

// Cluster-intrinsic ball sizes |B(v, 1)| and |B(v, 2)| over open edges.
std::pair<double, double> local_growth(const Graph& graph, const BondConfig& bonds, VertexId v) {
  std::vector<VertexId> first;
  for (EdgeId e : graph.incident_edges(v)) {
    if (!bonds.contains(e)) continue;
    const VertexId w = graph.other(e, v);
    if (std::find(first.begin(), first.end(), w) == first.end()) first.push_back(w);
  }
  std::vector<VertexId> second;
  for (VertexId w : first) {
    for (EdgeId e : graph.incident_edges(w)) {
      if (!bonds.contains(e)) continue;
      const VertexId x = graph.other(e, w);
      if (x == v || std::find(first.begin(), first.end(), x) != first.end()) continue;
      if (std::find(second.begin(), second.end(), x) == second.end()) second.push_back(x);
    }
  }
  const double b1 = 1.0 + static_cast<double>(first.size());
  return {b1, b1 + static_cast<double>(second.size())};
}

double vertex_observable(const Graph& graph, const BondConfig& bonds, VertexId v, Observable o) {
  switch (o) {
    case Observable::kOpenEdgeDensity: {
      double present = 0.0, open = 0.0;
      for (EdgeId e : graph.slots(v)) {
        if (e == kNone) continue;
        present += 1.0;
        if (bonds.contains(e)) open += 1.0;
      }
      return present > 0.0 ? open / present : 0.0;
    }
    case Observable::kMeanDegree: {
      double open = 0.0;
      for (EdgeId e : graph.slots(v)) {
        if (e != kNone && bonds.contains(e)) open += 1.0;
      }
      return open;
    }
    case Observable::kGrowthRatio: {
      const auto [b1, b2] = local_growth(graph, bonds, v);
      return b2 / b1;
    }
  }
  return 0.0;
}

std::vector<double> resample_sorted(const ClusterSample& values, std::span<const double> uniforms) {
  std::vector<double> out;
  out.reserve(uniforms.size());
  const std::size_t n = values.size();
  for (double u : uniforms) {
    const auto i = std::min(n - 1, static_cast<std::size_t>(u * static_cast<double>(n)));
    out.push_back(values[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Observable parse_observable(std::string_view name) {
  if (name == "open-edge-density") return Observable::kOpenEdgeDensity;
  if (name == "mean-degree") return Observable::kMeanDegree;
  if (name == "growth-ratio") return Observable::kGrowthRatio;
  fail(ErrorCode::kInvalidArgument, fmt::format("unknown observable '{}'", name));
}

const char* observable_name(Observable o) {
  switch (o) {
    case Observable::kOpenEdgeDensity: return "open-edge-density";
    case Observable::kMeanDegree: return "mean-degree";
    case Observable::kGrowthRatio: return "growth-ratio";
  }
  return "?";
}

ConfigurationSample collect_cluster_observables(const Graph& graph, const BondConfig& bonds,
                                                const ClusterDecomposition& clusters,
                                                Observable observable, double min_size,
                                                std::uint64_t order_seed) {
  std::vector<VertexId> chosen;
  for (const ClusterStats& c : clusters.clusters()) {
    if (c.touches_boundary && static_cast<double>(c.size) >= min_size) chosen.push_back(c.id);
  }
  Rng rng(order_seed);
  for (std::size_t i = chosen.size(); i > 1; --i) {
    std::swap(chosen[i - 1], chosen[rng.below(i)]);
  }
  std::vector<std::uint32_t> slot(graph.vertex_count(), kNone);
  for (std::uint32_t i = 0; i < chosen.size(); ++i) slot[chosen[i]] = i;

  ConfigurationSample out;
  out.clusters.resize(chosen.size());
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    const std::uint32_t s = slot[clusters.cluster_id(v)];
    if (s != kNone) out.clusters[s].push_back(vertex_observable(graph, bonds, v, observable));
  }
  return out;
}

double ks_distance(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) return 0.0;
  std::size_t i = 0, j = 0;
  double best = 0.0;
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    best = std::max(best, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return best;
}

IndistReport indistinguishability_test(std::span<const ConfigurationSample> samples,
                                       const IndistOptions& options) {
  if (!(options.alpha > 0.0 && options.alpha < 1.0)) {
    fail(ErrorCode::kInvalidArgument, fmt::format("alpha = {} outside (0, 1)", options.alpha));
  }
  if (options.resample < 1) fail(ErrorCode::kInvalidArgument, "resample size must be >= 1");

  IndistReport report;
  report.observable = observable_name(options.observable);
  report.alpha = options.alpha;
  report.configurations = samples.size();

  std::vector<std::size_t> used;
  for (std::size_t c = 0; c < samples.size(); ++c) {
    const auto& clusters = samples[c].clusters;
    if (clusters.size() >= 2 && !clusters[0].empty() && !clusters[1].empty()) used.push_back(c);
  }
  if (used.size() < options.min_configurations || used.size() < 2) {
    fail(ErrorCode::kInsufficientData,
         fmt::format("{} of {} configurations have >= 2 large boundary-touching clusters; need {}",
                     used.size(), samples.size(), std::max<std::size_t>(options.min_configurations, 2)));
  }
  report.used = used.size();

  // One stream of uniforms shared by every cluster: identical clusters give
  // identical resamples, and no pair is favoured over another.
  std::vector<double> uniforms(options.resample);
  const std::uint64_t stream = derive_seed(options.seed, "indist-resample");
  for (std::size_t j = 0; j < uniforms.size(); ++j) uniforms[j] = counter_uniform(stream, j);

  std::vector<std::vector<double>> first, second;
  for (std::size_t c : used) {
    report.group_sizes.push_back(samples[c].clusters.size());
    first.push_back(resample_sorted(samples[c].clusters[0], uniforms));
    second.push_back(resample_sorted(samples[c].clusters[1], uniforms));
    report.within.push_back(ks_distance(first.back(), second.back()));
  }

  std::vector<double> baseline;
  for (std::size_t i = 0; i < used.size(); ++i) {
    for (std::size_t j = i + 1; j < used.size(); ++j) {
      baseline.push_back(ks_distance(first[i], first[j]));
      baseline.push_back(ks_distance(second[i], second[j]));
    }
  }
  std::sort(baseline.begin(), baseline.end());
  report.baseline_pairs = baseline.size();
  const auto rank = static_cast<std::size_t>(
      std::ceil((1.0 - options.alpha) * static_cast<double>(baseline.size())));
  report.baseline_quantile = baseline[std::clamp<std::size_t>(rank, 1, baseline.size()) - 1];

  std::size_t exceed = 0;
  for (double w : report.within) {
    if (w > report.baseline_quantile) ++exceed;
  }
  report.exceedance_rate = static_cast<double>(exceed) / static_cast<double>(used.size());
  if (exceed > 0) {
    const boost::math::binomial_distribution<double> null_law(static_cast<double>(used.size()), options.alpha);
    report.p_value = boost::math::cdf(boost::math::complement(null_law, static_cast<double>(exceed - 1)));
  }
  report.distinguishable = report.p_value < options.alpha;
  return report;
}

}  // namespace orbi
