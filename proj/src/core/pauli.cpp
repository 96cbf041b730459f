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

#include "core/pauli.hpp"

#include <bit>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace tspqaoa {

void PauliPolynomial::add_mantissa(const TermKey &support, int128 mantissa) {
  if (mantissa == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(support, mantissa);
  if (!inserted) {
    it->second = checked_add(it->second, mantissa);
    if (it->second == 0)
      terms_.erase(it);
  }
}

double PauliPolynomial::coefficient(const TermKey &support) const {
  auto it = terms_.find(support);
  return it == terms_.end() ? 0.0 : scale_.decode(it->second);
}

double PauliPolynomial::evaluate(std::uint64_t z) const {
  if (num_qubits_ > 63)
    throw std::invalid_argument("PauliPolynomial: evaluation needs at most 63 qubits");
  int128 acc = 0;
  for (const auto &[support, mant] : terms_) {
    std::uint64_t mask = BinaryPolynomial::key_to_mask(support);
    acc = checked_add(acc, std::popcount(mask & z) % 2 == 0 ? mant : -mant);
  }
  return scale_.decode(acc);
}

PauliPolynomial pauli_expand(const BinaryPolynomial &poly) {
  const int w_max = poly.max_term_weight();
  if (w_max > 30)
    throw std::invalid_argument("pauli_expand: term weight too large");

  // Working grid is w_max bits finer so every halving stays exact.
  DyadicScale scale{poly.scale().shift - w_max};
  PauliPolynomial pp(poly.num_vars(), scale);

  for (const auto &[key, mant] : poly.terms()) {
    const int w = static_cast<int>(key.size());
    // x_i -> (1 - Z_i)/2 turns the term into a signed sum over all subsets
    // of its support, with coefficient a / 2^w.
    const int128 base = checked_shl(mant, w_max - w);
    const std::uint64_t sub_count = std::uint64_t{1} << w;
    for (std::uint64_t sub = 0; sub < sub_count; ++sub) {
      TermKey support;
      for (int b = 0; b < w; ++b)
        if (sub & (std::uint64_t{1} << b))
          support.push_back(key[static_cast<std::size_t>(b)]);
      pp.add_mantissa(support, std::popcount(sub) % 2 == 0 ? base : -base);
    }
  }
  return pp;
}

GateCounts gate_count(const PauliPolynomial &pp) {
  GateCounts counts;
  for (const auto &[support, mant] : pp.terms()) {
    const int w = static_cast<int>(support.size());
    if (w == 0)
      continue; // identity shifts need no gates
    counts.rotations += 1;
    counts.two_qubit_gates += 2 * static_cast<std::uint64_t>(w - 1);
    counts.weight_histogram[w] += 1;
  }
  return counts;
}

void save_pauli(const PauliPolynomial &pp, const std::string &path) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("save_pauli: cannot open " + path);
  out << "# tspqaoa pauli-z polynomial\n";
  out << "qubits " << pp.num_qubits() << "\n";
  char buf[64];
  for (const auto &[support, mant] : pp.terms()) {
    for (auto idx : support)
      out << idx << ' ';
    std::snprintf(buf, sizeof buf, "%.17g", pp.scale().decode(mant));
    out << buf << "\n";
  }
  if (!out)
    throw std::runtime_error("save_pauli: write failed for " + path);
}

} // namespace tspqaoa
