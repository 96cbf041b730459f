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

#ifndef TSPQAOA_CORE_EXACT_TSP_H
#define TSPQAOA_CORE_EXACT_TSP_H

#include <cstdint>
#include <vector>

#include "core/instance.hpp"

namespace tspqaoa {

// Ground-truth output of the exact solvers. Tours are directed city sequences
// starting at city 0; the reversal of an optimal tour is itself optimal for
// symmetric W, so all_optimal_tours normally holds an even number of entries.
struct OptimalSolution {
  std::vector<int> tour;
  double length = 0.0;
  std::vector<std::vector<int>> all_optimal_tours;
  // Distinct undirected tours seen by the enumeration solver, (n-1)!/2 for
  // n >= 3. Held-Karp leaves it at 0.
  std::uint64_t undirected_tour_count = 0;
};

// Brute force over all (n-1)! directed tours. Tour lengths are accumulated in
// exact dyadic arithmetic so ties (such as tour reversals) compare exactly.
// Rejects n > 12.
OptimalSolution solve_exact_enumeration(const TspInstance &inst);

// Subset dynamic program, O(n^2 2^n) time. Optimal length is exactly equal to
// the enumeration solver's on the overlapping domain. Rejects n > 20.
OptimalSolution solve_exact_held_karp(const TspInstance &inst);

// Sum of W over consecutive tour edges plus the closing edge, exactly
// accumulated and correctly rounded (consistent with the solvers and the
// energy builders).
double tour_length(const TspInstance &inst, const std::vector<int> &tour);

} // namespace tspqaoa

#endif
