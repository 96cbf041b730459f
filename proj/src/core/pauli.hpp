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

#ifndef TSPQAOA_CORE_PAULI_H
#define TSPQAOA_CORE_PAULI_H

#include <cstdint>
#include <map>
#include <string>

#include "core/polynomial.hpp"

namespace tspqaoa {

// Diagonal operator as a sum of Pauli-Z monomials: each term is the product
// of Z over its support, identity elsewhere. Shares the exact-coefficient
// storage of BinaryPolynomial, so basis-state evaluation reproduces the
// originating energy table bit for bit.
class PauliPolynomial {
public:
  using TermMap = std::map<TermKey, int128, SubsetSizeOrder>;

  PauliPolynomial(int num_qubits, DyadicScale scale) : num_qubits_(num_qubits), scale_(scale) {}

  int num_qubits() const { return num_qubits_; }
  const DyadicScale &scale() const { return scale_; }
  const TermMap &terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  void add_mantissa(const TermKey &support, int128 mantissa);
  double coefficient(const TermKey &support) const;

  // Sum over terms of coeff * (-1)^(popcount(support & z)), correctly
  // rounded. Requires num_qubits <= 63.
  double evaluate(std::uint64_t z) const;

private:
  int num_qubits_;
  DyadicScale scale_;
  TermMap terms_;
};

// Substitutes x_i = (1 - Z_i)/2 into every term and collects Z-monomials.
PauliPolynomial pauli_expand(const BinaryPolynomial &poly);

// Standard CNOT-ladder compilation of exp(-i theta Z...Z): each weight-w
// monomial (w >= 1) costs one rotation and 2(w-1) two-qubit gates.
struct GateCounts {
  std::uint64_t rotations = 0;
  std::uint64_t two_qubit_gates = 0;
  std::map<int, std::uint64_t> weight_histogram;
};

GateCounts gate_count(const PauliPolynomial &pp);

// Text export: `support... coefficient` lines, same shape as the polynomial
// format.
void save_pauli(const PauliPolynomial &pp, const std::string &path);

} // namespace tspqaoa

#endif
