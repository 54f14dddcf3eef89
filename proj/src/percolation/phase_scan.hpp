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

#ifndef ORBIFOREST_PERCOLATION_PHASE_SCAN_HPP
#define ORBIFOREST_PERCOLATION_PHASE_SCAN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "group/cayley.hpp"

namespace orbi {

struct PhaseScanOptions {
  std::vector<int> radii;
  std::vector<double> p_grid;  // strictly increasing, inside [0, 1]
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  double delta_c = 0.05;
  double delta_u = 0.05;
  unsigned workers = 1;
  std::size_t vertex_cap = kDefaultVertexCap;
};

struct PhaseScanRow {
  int radius;
  double p;
  std::size_t trials;
  double theta_hat;   // P[o <-> sphere of radius R]
  double u_hat;       // P[refs joined | both refs boundary-touching]; NaN if never conditioned
  double nbig_hat;    // mean number of boundary-touching clusters with >= log2|V| vertices
  double se_theta;
  std::size_t u_conditioned;
};

struct ReferencePair {
  VertexId a;
  VertexId b;
  std::uint32_t distance;
};

struct PhaseScanRadius {
  int radius;
  std::size_t vertex_count;
  ReferencePair references;
  std::optional<double> p_c_hat;
  std::optional<double> p_u_hat;
};

struct PhaseScanResult {
  std::vector<PhaseScanRow> rows;  // radius-major, then grid order
  std::vector<PhaseScanRadius> summary;
};

// Two vertices at word length R-1: the first one in BFS order, and the one
// farthest from it in the ball (ties to the lower index). Throws kDegenerate
// unless R >= 2 and their distance is at least R.
ReferencePair uniqueness_references(const CayleyBall& ball);

// Scans the grid on a prebuilt ball. Each trial draws one label
// configuration and sweeps every grid value through the monotone coupling,
// so curves are non-decreasing per trial.
PhaseScanRadius scan_ball(const CayleyBall& ball, const PhaseScanOptions& options,
                          std::vector<PhaseScanRow>& rows);

PhaseScanResult phase_scan(const GroupSpec& spec, const std::vector<std::string>& generators,
                           const PhaseScanOptions& options);

}  // namespace orbi

#endif  // ORBIFOREST_PERCOLATION_PHASE_SCAN_HPP
