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

#ifndef ORBIFOREST_COST_COST_HPP
#define ORBIFOREST_COST_COST_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "group/cayley.hpp"
#include "percolation/percolation.hpp"

namespace orbi {

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

// Mean and standard error of the mean, summed in index order.
Estimate estimate_mean(std::span<const double> values);

// Cost of the cluster graphing under Bernoulli(p): one domain of measure p
// per generator. Throws kInvalidArgument for p outside [0, 1].
double graphing_cost_exact(std::size_t generator_count, double p);

// Mean number of open edges (o, o s), s in S, per trial. Needs radius >= 1.
Estimate graphing_cost_empirical(const CayleyBall& ball, double p, std::size_t trials,
                                 std::uint64_t seed, unsigned workers = 1);

struct TreeingSample {
  bool origin_touches_boundary = false;
  std::uint32_t origin_degree = 0;  // degree of o in the treeing forest
};

struct TreeingEstimate {
  double w = 0.0;  // fraction of samples whose origin cluster meets the boundary
  double w_se = 0.0;
  std::size_t samples = 0;
  std::size_t conditioned = 0;
  // Half the conditional mean degree of o; empty when no sample is conditioned.
  std::optional<double> cost_hat;
  double cost_se = 0.0;
};

TreeingEstimate treeing_cost_estimate(std::span<const TreeingSample> samples);

// Restricted normalized cost from the cost of an extension to the whole
// space: 1 + (c - 1) / w. Requires w in (0, 1] and c >= w.
template <typename Real>
Real induction_normalize(const Real& extended_cost, const Real& w);

// Inverse of induction_normalize: 1 + w (c - 1). Requires w in (0, 1], c >= 1.
template <typename Real>
Real extend_to_full(const Real& restricted_cost, const Real& w);

extern template double induction_normalize<double>(const double&, const double&);
extern template double extend_to_full<double>(const double&, const double&);
extern template mpq_class induction_normalize<mpq_class>(const mpq_class&, const mpq_class&);
extern template mpq_class extend_to_full<mpq_class>(const mpq_class&, const mpq_class&);

struct FirstReturn {
  VertexId gamma;            // the enumerated element, as a vertex
  VertexId translate;        // gamma^-1 . o, whose cluster decides gamma . x in U_inf
  std::size_t rank;          // position in the enumeration
};

// First element gamma_j in length-then-generator order with |gamma_j| <= R/2
// such that gamma_j . x lies in the boundary-touching locus, i.e. the vertex
// gamma_j^-1 is in a boundary-touching cluster. Identity if the origin
// cluster already touches the boundary; nullopt when none is found (censored).
std::optional<FirstReturn> first_return(const CayleyBall& ball, const ClusterDecomposition& clusters);

}  // namespace orbi

#endif  // ORBIFOREST_COST_COST_HPP
