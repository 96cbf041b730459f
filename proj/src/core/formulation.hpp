// Copyright 2026 The tspqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TSPQAOA_CORE_FORMULATION_H
#define TSPQAOA_CORE_FORMULATION_H

#include <vector>

#include "core/encoding.hpp"
#include "core/instance.hpp"
#include "core/polynomial.hpp"

namespace tspqaoa {

// Weights of the one-hot constraint and route energies. Every invalid
// assignment must cost more than any tour, which requires
// constraint_weight > route_weight * max(W).
struct OneHotConfig {
  double constraint_weight; // A
  double route_weight;      // B
};

// Penalty added for repeated or invalid city codes in the compact encoding;
// must exceed any possible tour length, i.e. n * max(W).
struct CompactConfig {
  double penalty; // P
};

OneHotConfig default_onehot_config(const TspInstance &inst);
CompactConfig default_compact_config(const TspInstance &inst);

// A pairwise energy target: value for every joint assignment of two k-bit
// blocks. Index bit m is variable y_m of the concatenated pair, the low k
// bits belonging to the earlier time step.
using PairRhs = std::vector<double>;

// Unique multilinear interpolation of rhs over 2k variables, computed by
// forward substitution over the subset-size ordering in which the evaluation
// matrix is lower triangular with unit diagonal. Exact: re-evaluating the
// result at any input reproduces rhs bit for bit.
BinaryPolynomial solve_pair_coefficients(const PairRhs &rhs, int k);

// Same contract via the fast Moebius transform, O(2^{2k} * 2k); agrees with
// solve_pair_coefficients exactly.
BinaryPolynomial mobius_pair_coefficients(const PairRhs &rhs, int k);

// The 2^{2k} x 2^{2k} 0/1 evaluation matrix of the pairwise system with rows
// and columns in subset-size order (row i = indicator bitstring of the
// column-i subset).
std::vector<std::vector<int>> pair_system_matrix(int k);

// One-hot energy over (n-1)^2 variables: quadratic constraint brackets per
// city and per time step scaled by A, plus route terms B*W over cyclically
// consecutive time steps with the fixed-city boundary edges folded into
// linear terms. Valid permutations cost B * tour length; anything else costs
// at least A more than zero constraint energy.
BinaryPolynomial build_onehot_energy(const TspInstance &inst, const OneHotConfig &cfg);

// Compact energy over (n-1)*ceil(log2 n) variables, assembled from pairwise
// blocks solved through the linear system, plus unary terms for the fixed
// city's boundary edges, fixed-code clashes, and (for n not a power of two)
// invalid codes. Valid permutations cost exactly their closed-tour length;
// anything else costs at least P minus at most n route weights more.
BinaryPolynomial build_compact_energy(const TspInstance &inst, const CompactConfig &cfg);

BinaryPolynomial build_energy(const TspInstance &inst, const EncodingScheme &scheme);

} // namespace tspqaoa

#endif
