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

#include "core/exact_tsp.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "core/dyadic.hpp"

namespace tspqaoa {

namespace {

// W encoded on a shared dyadic grid; tour sums become exact integer sums.
struct ExactDistances {
  explicit ExactDistances(const TspInstance &inst)
      : n(inst.city_count()), scale(DyadicScale::covering(inst.distance_matrix())) {
    w.reserve(inst.distance_matrix().size());
    for (double d : inst.distance_matrix())
      w.push_back(scale.encode(d));
  }

  int128 at(int u, int v) const { return w[static_cast<std::size_t>(u) * n + v]; }

  int n;
  DyadicScale scale;
  std::vector<int128> w;
};

int128 exact_tour_length(const ExactDistances &d, const std::vector<int> &tour) {
  int128 total = 0;
  for (std::size_t i = 0; i + 1 < tour.size(); ++i)
    total = checked_add(total, d.at(tour[i], tour[i + 1]));
  total = checked_add(total, d.at(tour.back(), tour.front()));
  return total;
}

} // namespace

double tour_length(const TspInstance &inst, const std::vector<int> &tour) {
  if (tour.empty())
    throw std::invalid_argument("tour_length: empty tour");
  ExactDistances d(inst);
  return d.scale.decode(exact_tour_length(d, tour));
}

OptimalSolution solve_exact_enumeration(const TspInstance &inst) {
  const int n = inst.city_count();
  if (n > 12)
    throw std::invalid_argument("solve_exact_enumeration: n > 12 is not supported");

  ExactDistances d(inst);

  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 1);

  OptimalSolution best;
  int128 best_len = 0;
  bool have_best = false;

  std::vector<int> tour(static_cast<std::size_t>(n));
  tour[0] = 0;
  std::uint64_t undirected = 0;
  do {
    std::copy(rest.begin(), rest.end(), tour.begin() + 1);
    if (n == 2 || tour[1] < tour.back())
      ++undirected;
    int128 len = exact_tour_length(d, tour);
    if (!have_best || len < best_len) {
      best_len = len;
      best.tour = tour;
      best.all_optimal_tours.clear();
      best.all_optimal_tours.push_back(tour);
      have_best = true;
    } else if (len == best_len) {
      best.all_optimal_tours.push_back(tour);
    }
  } while (std::next_permutation(rest.begin(), rest.end()));

  best.length = d.scale.decode(best_len);
  best.undirected_tour_count = undirected;
  return best;
}

OptimalSolution solve_exact_held_karp(const TspInstance &inst) {
  const int n = inst.city_count();
  if (n > 20)
    throw std::invalid_argument("solve_exact_held_karp: n > 20 is not supported");

  ExactDistances d(inst);
  const int m = n - 1; // cities 1..n-1, bit j <-> city j+1
  const std::size_t full = std::size_t{1} << m;
  constexpr int128 kUnset = -1;

  std::vector<int128> dp(full * static_cast<std::size_t>(m), kUnset);
  auto at = [&](std::size_t mask, int j) -> int128 & { return dp[mask * static_cast<std::size_t>(m) + j]; };

  for (int j = 0; j < m; ++j)
    at(std::size_t{1} << j, j) = d.at(0, j + 1);

  for (std::size_t mask = 1; mask < full; ++mask) {
    if ((mask & (mask - 1)) == 0)
      continue;
    for (int j = 0; j < m; ++j) {
      if (!(mask & (std::size_t{1} << j)))
        continue;
      const std::size_t prev = mask ^ (std::size_t{1} << j);
      int128 bestv = kUnset;
      for (int i = 0; i < m; ++i) {
        if (!(prev & (std::size_t{1} << i)))
          continue;
        int128 cand = checked_add(at(prev, i), d.at(i + 1, j + 1));
        if (bestv == kUnset || cand < bestv)
          bestv = cand;
      }
      at(mask, j) = bestv;
    }
  }

  const std::size_t all = full - 1;
  int128 best_len = kUnset;
  for (int j = 0; j < m; ++j) {
    int128 cand = checked_add(at(all, j), d.at(j + 1, 0));
    if (best_len == kUnset || cand < best_len)
      best_len = cand;
  }

  // Backtrack over every argmin choice to recover the full optimal set;
  // comparisons are exact, so reversals and genuine ties are all found.
  OptimalSolution out;
  std::vector<int> suffix;
  auto backtrack = [&](auto &&self, std::size_t mask, int j, int128 target) -> void {
    suffix.push_back(j + 1);
    const std::size_t prev = mask ^ (std::size_t{1} << j);
    if (prev == 0) {
      std::vector<int> tour;
      tour.reserve(static_cast<std::size_t>(n));
      tour.push_back(0);
      for (auto it = suffix.rbegin(); it != suffix.rend(); ++it)
        tour.push_back(*it);
      out.all_optimal_tours.push_back(std::move(tour));
    } else {
      for (int i = 0; i < m; ++i) {
        if (!(prev & (std::size_t{1} << i)))
          continue;
        if (checked_add(at(prev, i), d.at(i + 1, j + 1)) == target)
          self(self, prev, i, at(prev, i));
      }
    }
    suffix.pop_back();
  };
  for (int j = 0; j < m; ++j)
    if (checked_add(at(all, j), d.at(j + 1, 0)) == best_len)
      backtrack(backtrack, all, j, at(all, j));

  std::sort(out.all_optimal_tours.begin(), out.all_optimal_tours.end());
  out.all_optimal_tours.erase(std::unique(out.all_optimal_tours.begin(), out.all_optimal_tours.end()),
                              out.all_optimal_tours.end());
  out.tour = out.all_optimal_tours.front();
  out.length = d.scale.decode(best_len);
  return out;
}

} // namespace tspqaoa
