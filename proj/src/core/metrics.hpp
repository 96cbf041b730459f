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

#ifndef TSPQAOA_CORE_METRICS_H
#define TSPQAOA_CORE_METRICS_H

#include <cstdint>
#include <vector>

#include "core/encoding.hpp"
#include "core/exact_tsp.hpp"
#include "core/simulator.hpp"

namespace tspqaoa {

struct RunMetrics {
  double approximation_ratio = 0.0;
  double true_percentage = 0.0;
  std::uint64_t rank = 1;
};

// Every basis state that decodes to an optimal tour. Both orientations of an
// undirected optimum are separate directed tours and contribute separate
// bitstrings.
std::vector<std::uint64_t> optimal_bitstrings(const EncodingScheme &scheme,
                                              const std::vector<std::vector<int>> &optimal_tours);

// <H_P> / optimal tour length.
double approximation_ratio(const Statevector &state, const EnergyTable &table, double opt_length);

// Total probability of measuring any optimal-tour bitstring.
double true_percentage(const Statevector &state, const std::vector<std::uint64_t> &optimal_bits);

// 1 + number of basis states strictly more probable than the best
// optimal-tour bitstring (ties resolve in favor of the optimum).
std::uint64_t rank(const Statevector &state, const std::vector<std::uint64_t> &optimal_bits);

RunMetrics compute_metrics(const Statevector &state, const EnergyTable &table,
                           const EncodingScheme &scheme, const OptimalSolution &solution);

} // namespace tspqaoa

#endif
