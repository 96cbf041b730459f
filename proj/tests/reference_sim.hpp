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

#ifndef TSPQAOA_TESTS_REFERENCE_SIM_H
#define TSPQAOA_TESTS_REFERENCE_SIM_H

// Brute-force dense-matrix reference for small registers: build H_P and H_M
// as explicit 2^N x 2^N matrices, exponentiate by scaled Taylor series and
// multiply. Shares no code with the production engine.

#include <complex>
#include <vector>

#include "core/polynomial.hpp"
#include "core/simulator.hpp"

namespace tspqaoa::reference {

using Complex = std::complex<double>;
using Matrix = std::vector<std::vector<Complex>>;

inline Matrix identity(std::size_t dim) {
  Matrix m(dim, std::vector<Complex>(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i)
    m[i][i] = 1.0;
  return m;
}

inline Matrix multiply(const Matrix &a, const Matrix &b) {
  const std::size_t dim = a.size();
  Matrix out(dim, std::vector<Complex>(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) {
      const Complex aik = a[i][k];
      if (aik == Complex{})
        continue;
      for (std::size_t j = 0; j < dim; ++j)
        out[i][j] += aik * b[k][j];
    }
  return out;
}

inline double one_norm(const Matrix &m) {
  double best = 0.0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i)
      col += std::abs(m[i][j]);
    best = std::max(best, col);
  }
  return best;
}

// exp(m) by scaling-and-squaring with a Taylor series.
inline Matrix matrix_exponential(const Matrix &m) {
  int squarings = 0;
  double norm = one_norm(m);
  while (norm > 0.5) {
    norm /= 2.0;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);
  const std::size_t dim = m.size();
  Matrix scaled(dim, std::vector<Complex>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      scaled[i][j] = m[i][j] * scale;

  Matrix result = identity(dim);
  Matrix term = identity(dim);
  for (int k = 1; k <= 40; ++k) {
    term = multiply(term, scaled);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        term[i][j] /= static_cast<double>(k);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        result[i][j] += term[i][j];
  }
  for (int s = 0; s < squarings; ++s)
    result = multiply(result, result);
  return result;
}

inline Matrix problem_hamiltonian(const EnergyTable &table) {
  const std::size_t dim = table.energies.size();
  Matrix h(dim, std::vector<Complex>(dim, 0.0));
  for (std::size_t z = 0; z < dim; ++z)
    h[z][z] = table.energies[z];
  return h;
}

inline Matrix mixer_hamiltonian(int num_qubits) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  Matrix h(dim, std::vector<Complex>(dim, 0.0));
  for (std::size_t z = 0; z < dim; ++z)
    for (int q = 0; q < num_qubits; ++q)
      h[z][z ^ (std::size_t{1} << q)] += 1.0;
  return h;
}

inline std::vector<Complex> apply_matrix(const Matrix &m, const std::vector<Complex> &v) {
  const std::size_t dim = m.size();
  std::vector<Complex> out(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      out[i] += m[i][j] * v[j];
  return out;
}

inline Matrix scaled(const Matrix &m, Complex factor) {
  Matrix out = m;
  for (auto &row : out)
    for (auto &entry : row)
      entry *= factor;
  return out;
}

// Full QAOA circuit on the uniform state via dense exponentials.
inline std::vector<Complex> run_qaoa_dense(const EnergyTable &table, const QaoaSchedule &schedule) {
  const std::size_t dim = table.energies.size();
  std::vector<Complex> state(dim, Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
  const Matrix hp = problem_hamiltonian(table);
  const Matrix hm = mixer_hamiltonian(table.num_qubits);
  for (const auto &layer : schedule) {
    state = apply_matrix(matrix_exponential(scaled(hp, Complex(0.0, -layer.gamma))), state);
    state = apply_matrix(matrix_exponential(scaled(hm, Complex(0.0, -layer.beta))), state);
  }
  return state;
}

} // namespace tspqaoa::reference

#endif
