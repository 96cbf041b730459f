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

#ifndef TSPQAOA_CORE_SIMULATOR_H
#define TSPQAOA_CORE_SIMULATOR_H

#include <complex>
#include <string>
#include <vector>

#include "core/polynomial.hpp"

namespace tspqaoa {

// Dense register state, 2^N amplitudes, bit i of the index = qubit i.
struct Statevector {
  int num_qubits = 0;
  std::vector<std::complex<double>> amps;

  double norm_squared() const;
};

// Per-layer (gamma, beta) angles in radians; gamma drives the phase
// separator exp(-i gamma H_P), beta the transverse-field mixer.
struct QaoaLayer {
  double gamma = 0.0;
  double beta = 0.0;
};
using QaoaSchedule = std::vector<QaoaLayer>;

// Uniform superposition (Hadamard on every qubit). Requires 1 <= N <= 26.
Statevector uniform_state(int num_qubits);

// amp[z] *= exp(-i * gamma * table[z]).
void apply_phase(Statevector &state, const EnergyTable &table, double gamma);

// Product of single-qubit rotations exp(-i beta X) on every qubit.
void apply_mixer(Statevector &state, double beta);

// Phase separator then mixer, per layer in order. Requires at least one
// layer.
Statevector run_qaoa(const EnergyTable &table, const QaoaSchedule &schedule);

// Sum over z of |amp[z]|^2 * table[z].
double expectation(const Statevector &state, const EnergyTable &table);

std::vector<double> probabilities(const Statevector &state);

// Debug dump, one `index re im` line per amplitude.
void save_statevector(const Statevector &state, const std::string &path);

} // namespace tspqaoa

#endif
