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

#include "core/simulator.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace tspqaoa {

double Statevector::norm_squared() const {
  double acc = 0.0;
  for (const auto &a : amps)
    acc += std::norm(a);
  return acc;
}

Statevector uniform_state(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxTableQubits)
    throw std::invalid_argument("uniform_state: qubit count must be in [1, 26]");
  Statevector state;
  state.num_qubits = num_qubits;
  const std::size_t dim = std::size_t{1} << num_qubits;
  state.amps.assign(dim, std::complex<double>(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
  return state;
}

void apply_phase(Statevector &state, const EnergyTable &table, double gamma) {
  if (table.num_qubits != state.num_qubits || table.energies.size() != state.amps.size())
    throw std::invalid_argument("apply_phase: state and table dimensions differ");
  for (std::size_t z = 0; z < state.amps.size(); ++z)
    state.amps[z] *= std::polar(1.0, -gamma * table.energies[z]);
}

void apply_mixer(Statevector &state, double beta) {
  const double c = std::cos(beta);
  const std::complex<double> ms(0.0, -std::sin(beta));
  for (int q = 0; q < state.num_qubits; ++q) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t z = 0; z < state.amps.size(); ++z) {
      if (z & bit)
        continue;
      const auto a = state.amps[z];
      const auto b = state.amps[z | bit];
      state.amps[z] = c * a + ms * b;
      state.amps[z | bit] = ms * a + c * b;
    }
  }
}

Statevector run_qaoa(const EnergyTable &table, const QaoaSchedule &schedule) {
  if (schedule.empty())
    throw std::invalid_argument("run_qaoa: schedule needs at least one layer");
  for (const auto &layer : schedule)
    if (!std::isfinite(layer.gamma) || !std::isfinite(layer.beta))
      throw std::invalid_argument("run_qaoa: non-finite layer parameters");
  Statevector state = uniform_state(table.num_qubits);
  for (const auto &layer : schedule) {
    apply_phase(state, table, layer.gamma);
    apply_mixer(state, layer.beta);
  }
  return state;
}

double expectation(const Statevector &state, const EnergyTable &table) {
  if (table.num_qubits != state.num_qubits || table.energies.size() != state.amps.size())
    throw std::invalid_argument("expectation: state and table dimensions differ");
  double acc = 0.0;
  for (std::size_t z = 0; z < state.amps.size(); ++z)
    acc += std::norm(state.amps[z]) * table.energies[z];
  return acc;
}

std::vector<double> probabilities(const Statevector &state) {
  std::vector<double> probs(state.amps.size());
  for (std::size_t z = 0; z < state.amps.size(); ++z)
    probs[z] = std::norm(state.amps[z]);
  return probs;
}

void save_statevector(const Statevector &state, const std::string &path) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("save_statevector: cannot open " + path);
  char buf[96];
  for (std::size_t z = 0; z < state.amps.size(); ++z) {
    std::snprintf(buf, sizeof buf, "%zu %.17g %.17g\n", z, state.amps[z].real(), state.amps[z].imag());
    out << buf;
  }
  if (!out)
    throw std::runtime_error("save_statevector: write failed for " + path);
}

} // namespace tspqaoa
