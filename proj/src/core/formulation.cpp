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

#include "core/formulation.hpp"

#include <bit>
#include <stdexcept>

namespace tspqaoa {

namespace {

constexpr int kMaxPairBits = 8; // 2k <= 16 keeps the 2^{2k} tables small

void check_pair_args(const PairRhs &rhs, int k) {
  if (k < 1 || k > kMaxPairBits)
    throw std::invalid_argument("pair coefficients: k must be in [1, 8]");
  if (rhs.size() != (std::size_t{1} << (2 * k)))
    throw std::invalid_argument("pair coefficients: rhs must cover all 2^(2k) pair assignments");
}

// In-place subset-difference butterfly: values -> multilinear coefficients.
void mobius_transform(std::vector<int128> &values, int num_vars) {
  const std::size_t size = std::size_t{1} << num_vars;
  for (int b = 0; b < num_vars; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t m = 0; m < size; ++m)
      if (m & bit)
        values[m] = checked_add(values[m], -values[m ^ bit]);
  }
}

// Subsets of {0..num_vars-1} ordered by size, then by mask value.
std::vector<std::uint64_t> subsets_by_size(int num_vars) {
  std::vector<std::uint64_t> order;
  order.reserve(std::size_t{1} << num_vars);
  for (int sz = 0; sz <= num_vars; ++sz)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << num_vars); ++m)
      if (std::popcount(m) == sz)
        order.push_back(m);
  return order;
}

// Literal forward substitution through the lower-triangular system: the
// row for subset M is the evaluation at M's indicator bitstring, so
// a_M = rhs(indicator(M)) - sum of a_S over proper subsets S of M.
std::vector<int128> forward_substitution(const std::vector<int128> &values, int num_vars) {
  std::vector<int128> coeff(values.size(), 0);
  for (std::uint64_t m : subsets_by_size(num_vars)) {
    int128 acc = values[m];
    if (m != 0) {
      std::uint64_t s = (m - 1) & m;
      while (true) {
        acc = checked_add(acc, -coeff[s]);
        if (s == 0)
          break;
        s = (s - 1) & m;
      }
    }
    coeff[m] = acc;
  }
  return coeff;
}

BinaryPolynomial from_dense_coefficients(const std::vector<int128> &coeff, int num_vars,
                                         DyadicScale scale) {
  BinaryPolynomial poly(num_vars, scale);
  for (std::size_t m = 0; m < coeff.size(); ++m)
    if (coeff[m] != 0)
      poly.add_mantissa(static_cast<std::uint64_t>(m), coeff[m]);
  return poly;
}

} // namespace

OneHotConfig default_onehot_config(const TspInstance &inst) {
  const double b = 1.0;
  return {2.0 * b * inst.city_count() * inst.max_distance(), b};
}

CompactConfig default_compact_config(const TspInstance &inst) {
  return {2.0 * inst.city_count() * inst.max_distance()};
}

BinaryPolynomial solve_pair_coefficients(const PairRhs &rhs, int k) {
  check_pair_args(rhs, k);
  DyadicScale scale = DyadicScale::covering(rhs);
  std::vector<int128> values(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i)
    values[i] = scale.encode(rhs[i]);
  return from_dense_coefficients(forward_substitution(values, 2 * k), 2 * k, scale);
}

BinaryPolynomial mobius_pair_coefficients(const PairRhs &rhs, int k) {
  check_pair_args(rhs, k);
  DyadicScale scale = DyadicScale::covering(rhs);
  std::vector<int128> values(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i)
    values[i] = scale.encode(rhs[i]);
  mobius_transform(values, 2 * k);
  return from_dense_coefficients(values, 2 * k, scale);
}

std::vector<std::vector<int>> pair_system_matrix(int k) {
  if (k < 1 || k > 4)
    throw std::invalid_argument("pair_system_matrix: k must be in [1, 4]");
  auto order = subsets_by_size(2 * k);
  const std::size_t size = order.size();
  std::vector<std::vector<int>> mat(size, std::vector<int>(size, 0));
  for (std::size_t r = 0; r < size; ++r) {
    const std::uint64_t y = order[r]; // indicator bitstring of the r-th subset
    for (std::size_t c = 0; c < size; ++c)
      mat[r][c] = (y & order[c]) == order[c] ? 1 : 0;
  }
  return mat;
}

BinaryPolynomial build_onehot_energy(const TspInstance &inst, const OneHotConfig &cfg) {
  if (!(cfg.constraint_weight > 0.0) || !(cfg.route_weight > 0.0))
    throw std::invalid_argument("build_onehot_energy: weights must be positive");
  if (!(cfg.constraint_weight > cfg.route_weight * inst.max_distance()))
    throw std::invalid_argument(
        "build_onehot_energy: constraint weight must exceed route weight times max distance");

  const int n = inst.city_count();
  const int m = n - 1; // variable cities 1..n-1 and time steps 2..n
  auto var = [m](int city, int step) { return std::uint16_t(step * m + (city - 1)); };

  // Route weights enter as B*W products, rounded once; the constraint weight
  // enters only through exact small-integer multiples.
  std::vector<double> grid_inputs;
  grid_inputs.push_back(cfg.constraint_weight);
  std::vector<double> bw(static_cast<std::size_t>(n) * n, 0.0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      bw[static_cast<std::size_t>(u) * n + v] = cfg.route_weight * inst.distance(u, v);
      grid_inputs.push_back(bw[static_cast<std::size_t>(u) * n + v]);
    }

  DyadicScale scale = DyadicScale::covering(grid_inputs);
  const int128 a_mant = scale.encode(cfg.constraint_weight);
  auto bw_mant = [&](int u, int v) { return scale.encode(bw[static_cast<std::size_t>(u) * n + v]); };

  BinaryPolynomial poly(m * m, scale);

  // Constraint brackets A*(1 - sum x)^2, one per variable city and one per
  // variable time step. Multilinear expansion: 1 - sum_b x_b + 2 sum_{b<b'}.
  auto add_bracket = [&](const std::vector<std::uint16_t> &vars) {
    poly.add_mantissa(TermKey{}, a_mant);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      poly.add_mantissa(TermKey{vars[i]}, -a_mant);
      for (std::size_t j = i + 1; j < vars.size(); ++j) {
        TermKey key{vars[i], vars[j]};
        std::sort(key.begin(), key.end());
        poly.add_mantissa(key, checked_mul(a_mant, 2));
      }
    }
  };
  for (int city = 1; city <= m; ++city) {
    std::vector<std::uint16_t> vars;
    for (int step = 0; step < m; ++step)
      vars.push_back(var(city, step));
    add_bracket(vars);
  }
  for (int step = 0; step < m; ++step) {
    std::vector<std::uint16_t> vars;
    for (int city = 1; city <= m; ++city)
      vars.push_back(var(city, step));
    add_bracket(vars);
  }

  // Route energy over cyclic time steps. The fixed city contributes the two
  // boundary edges as linear terms; interior edges are quadratic.
  for (int city = 1; city <= m; ++city) {
    poly.add_mantissa(TermKey{var(city, 0)}, bw_mant(0, city));
    poly.add_mantissa(TermKey{var(city, m - 1)}, bw_mant(city, 0));
  }
  for (int step = 0; step + 1 < m; ++step)
    for (int u = 1; u <= m; ++u)
      for (int v = 1; v <= m; ++v) {
        if (u == v)
          continue;
        TermKey key{var(u, step), var(v, step + 1)};
        std::sort(key.begin(), key.end());
        poly.add_mantissa(key, bw_mant(u, v));
      }

  poly.prune_zeros();
  return poly;
}

BinaryPolynomial build_compact_energy(const TspInstance &inst, const CompactConfig &cfg) {
  const int n = inst.city_count();
  if (!(cfg.penalty > n * inst.max_distance()))
    throw std::invalid_argument("build_compact_energy: penalty must exceed n times max distance");

  const EncodingScheme scheme = EncodingScheme::compact(n);
  const int k = scheme.bits_per_step;
  const int steps = scheme.steps();
  const std::uint64_t codes = std::uint64_t{1} << k;

  std::vector<double> grid_inputs(inst.distance_matrix());
  grid_inputs.push_back(cfg.penalty);
  DyadicScale scale = DyadicScale::covering(grid_inputs);
  const int128 p_mant = scale.encode(cfg.penalty);
  auto w_mant = [&](int u, int v) { return scale.encode(inst.distance(u, v)); };

  BinaryPolynomial poly(scheme.qubit_count(), scale);

  auto add_block_function = [&](const std::vector<int128> &values, int vars, int base,
                                int stride_base2 = -1) {
    // Interpolate a dense block-local value table and splice the resulting
    // coefficients into the global variable numbering. For pairwise tables
    // the low k bits map to `base`, the high k bits to `stride_base2`.
    std::vector<int128> coeff(values);
    mobius_transform(coeff, vars);
    for (std::size_t mask = 0; mask < coeff.size(); ++mask) {
      if (coeff[mask] == 0)
        continue;
      TermKey key;
      for (int b = 0; b < vars; ++b)
        if (mask & (std::size_t{1} << b)) {
          int global = stride_base2 >= 0 && b >= k ? stride_base2 + (b - k) : base + b;
          key.push_back(static_cast<std::uint16_t>(global));
        }
      std::sort(key.begin(), key.end());
      poly.add_mantissa(key, coeff[mask]);
    }
  };

  // Unary terms per block: penalty for out-of-range codes and for reusing the
  // fixed city's code, plus the two boundary edges of the closed tour.
  for (int t = 0; t < steps; ++t) {
    std::vector<int128> values(codes, 0);
    for (std::uint64_t c = 0; c < codes; ++c) {
      if (c >= static_cast<std::uint64_t>(n) || c == 0) {
        values[c] = p_mant;
        continue;
      }
      int128 acc = 0;
      if (t == 0)
        acc = checked_add(acc, w_mant(0, static_cast<int>(c)));
      if (t == steps - 1)
        acc = checked_add(acc, w_mant(static_cast<int>(c), 0));
      values[c] = acc;
    }
    add_block_function(values, k, t * k);
  }

  // Pairwise terms: consecutive blocks price the route, all block pairs
  // penalize equal codes.
  for (int t1 = 0; t1 < steps; ++t1)
    for (int t2 = t1 + 1; t2 < steps; ++t2) {
      const bool adjacent = t2 == t1 + 1;
      std::vector<int128> values(codes * codes, 0);
      for (std::uint64_t c1 = 0; c1 < codes; ++c1)
        for (std::uint64_t c2 = 0; c2 < codes; ++c2) {
          int128 value = 0;
          if (c1 == c2)
            value = p_mant;
          else if (adjacent && c1 < static_cast<std::uint64_t>(n) && c2 < static_cast<std::uint64_t>(n))
            value = w_mant(static_cast<int>(c1), static_cast<int>(c2));
          values[(c2 << k) | c1] = value;
        }
      add_block_function(values, 2 * k, t1 * k, t2 * k);
    }

  poly.prune_zeros();
  return poly;
}

BinaryPolynomial build_energy(const TspInstance &inst, const EncodingScheme &scheme) {
  if (scheme.kind == Encoding::Compact)
    return build_compact_energy(inst, default_compact_config(inst));
  return build_onehot_energy(inst, default_onehot_config(inst));
}

} // namespace tspqaoa
