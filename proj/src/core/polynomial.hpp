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

#ifndef TSPQAOA_CORE_POLYNOMIAL_H
#define TSPQAOA_CORE_POLYNOMIAL_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/dyadic.hpp"

namespace tspqaoa {

// A term is the sorted list of variable indices it multiplies; the empty key
// is the constant term.
using TermKey = std::vector<std::uint16_t>;

// Subsets ordered by size first, then lexicographically. This is also the
// ordering used by the pairwise linear system and by the text export.
struct SubsetSizeOrder {
  bool operator()(const TermKey &a, const TermKey &b) const {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  }
};

// Sparse multilinear pseudo-Boolean polynomial with exact dyadic
// coefficients. Coefficients are stored as int128 mantissas on a shared
// power-of-two grid, so sums of polynomials and evaluations at 0/1 points are
// exact; doubles are produced by correct rounding at the boundary.
class BinaryPolynomial {
public:
  using TermMap = std::map<TermKey, int128, SubsetSizeOrder>;

  BinaryPolynomial(int num_vars, DyadicScale scale);

  int num_vars() const { return num_vars_; }
  const DyadicScale &scale() const { return scale_; }
  const TermMap &terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  int max_term_weight() const;

  void add_mantissa(const TermKey &key, int128 mantissa);
  void add_mantissa(std::uint64_t mask, int128 mantissa);
  void add(const TermKey &key, double coefficient);

  double coefficient(const TermKey &key) const;
  // Exact subset sum over the terms contained in the assignment, correctly
  // rounded. Requires num_vars <= 63.
  double evaluate(std::uint64_t assignment) const;
  int128 evaluate_mantissa(std::uint64_t assignment) const;

  void prune_zeros();

  static std::uint64_t key_to_mask(const TermKey &key);
  static TermKey mask_to_key(std::uint64_t mask);

private:
  int num_vars_;
  DyadicScale scale_;
  TermMap terms_;
};

// Dense diagonal Hamiltonian: energies[z] for every computational basis
// bitstring z (bit i of z = variable i).
struct EnergyTable {
  int num_qubits = 0;
  std::vector<double> energies;

  double min_energy() const;
  std::uint64_t argmin() const;
  double mean_energy() const;
};

inline constexpr int kMaxTableQubits = 26;

// Dense realization via the subset-sum fast zeta transform, O(2^N * N) exact
// integer butterflies. Rejects num_vars > 26.
EnergyTable energy_table(const BinaryPolynomial &poly);
// Same table by direct per-entry evaluation; agrees with energy_table bit for
// bit and serves as its cross-check.
EnergyTable energy_table_direct(const BinaryPolynomial &poly);

// Text export: one `index... coefficient` line per term, indices sorted, the
// last token on a line is the coefficient. The constant term has no indices.
void save_polynomial(const BinaryPolynomial &poly, const std::string &path);
BinaryPolynomial load_polynomial(const std::string &path);

} // namespace tspqaoa

#endif
