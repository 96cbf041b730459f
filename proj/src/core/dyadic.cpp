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

#include "core/dyadic.hpp"

#include <bit>
#include <cmath>
#include <limits>

namespace tspqaoa {

namespace {

// Mantissa magnitudes are capped well below 2^127 so that sums of many grid
// values stay representable without per-call bookkeeping by callers.
constexpr int kMaxMantissaBits = 126;

int bit_width_128(int128 v) {
  unsigned __int128 u = v < 0 ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  int w = 0;
  while (u != 0) {
    u >>= 1;
    ++w;
  }
  return w;
}

} // namespace

int lowest_set_bit_exponent(double d) {
  if (d == 0.0 || !std::isfinite(d))
    throw std::invalid_argument("lowest_set_bit_exponent: need finite nonzero value");
  int e = 0;
  double f = std::frexp(std::fabs(d), &e); // f in [0.5, 1)
  auto mant = static_cast<std::uint64_t>(std::ldexp(f, 53));
  return e - 53 + std::countr_zero(mant);
}

int128 DyadicScale::encode(double d) const {
  if (!std::isfinite(d))
    throw std::invalid_argument("dyadic encode: value not finite");
  if (d == 0.0)
    return 0;
  int e = 0;
  double f = std::frexp(std::fabs(d), &e);
  auto mant = static_cast<int128>(static_cast<std::uint64_t>(std::ldexp(f, 53)));
  int k = e - 53 - shift;
  int128 m;
  if (k >= 0) {
    if (k + 53 > kMaxMantissaBits)
      throw dyadic_range_error("dyadic encode: value too large for grid");
    m = mant << k;
  } else {
    if (-k > 52 || (mant & ((static_cast<int128>(1) << -k) - 1)) != 0)
      throw dyadic_range_error("dyadic encode: value not on grid");
    m = mant >> -k;
  }
  return d < 0 ? -m : m;
}

double DyadicScale::decode(int128 m) const {
  // int128 -> double is correctly rounded, and the power-of-two scaling is
  // exact, so the result is the correctly rounded value of m * 2^shift.
  return std::ldexp(static_cast<double>(m), shift);
}

DyadicScale DyadicScale::covering(std::span<const double> values, int extra_bits) {
  int lowest = 0;
  bool any = false;
  for (double v : values) {
    if (v == 0.0)
      continue;
    if (!std::isfinite(v))
      throw std::invalid_argument("dyadic grid: value not finite");
    int e = lowest_set_bit_exponent(v);
    lowest = any ? std::min(lowest, e) : e;
    any = true;
  }
  DyadicScale s{any ? lowest - extra_bits : -extra_bits};
  // Reject grids so fine that even a single input saturates the mantissa;
  // sums get their own overflow checks.
  for (double v : values)
    (void)s.encode(v);
  return s;
}

int128 checked_mul(int128 a, long long factor) {
  int128 r;
  if (__builtin_mul_overflow(a, static_cast<int128>(factor), &r))
    throw dyadic_range_error("exact accumulator overflow in scaling");
  return r;
}

int128 checked_shl(int128 a, int bits) {
  if (bits < 0)
    throw std::invalid_argument("checked_shl: negative shift");
  if (a == 0 || bits == 0)
    return a;
  if (bit_width_128(a) + bits > kMaxMantissaBits)
    throw dyadic_range_error("exact accumulator overflow in rescale");
  return a << bits;
}

} // namespace tspqaoa
