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

#include "core/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace tspqaoa {

std::vector<std::uint64_t> optimal_bitstrings(const EncodingScheme &scheme,
                                              const std::vector<std::vector<int>> &optimal_tours) {
  if (optimal_tours.empty())
    throw std::invalid_argument("optimal_bitstrings: empty optimal set");
  std::vector<std::uint64_t> bits;
  bits.reserve(optimal_tours.size());
  for (const auto &tour : optimal_tours)
    bits.push_back(encode_assignment(tour, scheme));
  std::sort(bits.begin(), bits.end());
  bits.erase(std::unique(bits.begin(), bits.end()), bits.end());
  return bits;
}

double approximation_ratio(const Statevector &state, const EnergyTable &table, double opt_length) {
  if (!(opt_length > 0.0))
    throw std::invalid_argument("approximation_ratio: optimal length must be positive");
  return expectation(state, table) / opt_length;
}

double true_percentage(const Statevector &state, const std::vector<std::uint64_t> &optimal_bits) {
  if (optimal_bits.empty())
    throw std::invalid_argument("true_percentage: empty optimal set");
  double acc = 0.0;
  for (std::uint64_t z : optimal_bits)
    acc += std::norm(state.amps[z]);
  return acc;
}

std::uint64_t rank(const Statevector &state, const std::vector<std::uint64_t> &optimal_bits) {
  if (optimal_bits.empty())
    throw std::invalid_argument("rank: empty optimal set");
  double best_opt = 0.0;
  for (std::uint64_t z : optimal_bits)
    best_opt = std::max(best_opt, std::norm(state.amps[z]));
  std::uint64_t above = 0;
  for (const auto &a : state.amps)
    if (std::norm(a) > best_opt)
      ++above;
  return above + 1;
}

RunMetrics compute_metrics(const Statevector &state, const EnergyTable &table,
                           const EncodingScheme &scheme, const OptimalSolution &solution) {
  auto bits = optimal_bitstrings(scheme, solution.all_optimal_tours);
  RunMetrics metrics;
  metrics.approximation_ratio = approximation_ratio(state, table, solution.length);
  metrics.true_percentage = true_percentage(state, bits);
  metrics.rank = rank(state, bits);
  return metrics;
}

} // namespace tspqaoa
