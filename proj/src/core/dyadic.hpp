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

#ifndef TSPQAOA_CORE_DYADIC_H
#define TSPQAOA_CORE_DYADIC_H

#include <cstdint>
#include <span>
#include <stdexcept>

namespace tspqaoa {

// Energy bookkeeping runs on exact dyadic arithmetic: every double input is a
// dyadic rational, and every quantity derived from it here (polynomial
// coefficients, table entries, tour lengths) is an integer combination of the
// inputs, optionally divided by a power of two. Storing values as int128
// mantissas on a shared power-of-two grid keeps all of that exact, so
// identities like "ground-state energy equals tour length" hold to the last
// bit instead of drifting with summation order.
using int128 = __int128;

// Exponent of the lowest set bit of a finite nonzero double, i.e. the largest
// e with d an integer multiple of 2^e.
int lowest_set_bit_exponent(double d);

// Thrown when a value set spans more binary orders of magnitude than the
// int128 mantissa can hold exactly.
class dyadic_range_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Fixed-point grid: a mantissa m represents the value m * 2^shift.
struct DyadicScale {
  int shift = 0;

  // Exact conversion; throws dyadic_range_error if d is not a multiple of
  // 2^shift or its mantissa does not fit.
  int128 encode(double d) const;
  // Correctly rounded back-conversion.
  double decode(int128 m) const;

  // Grid fine enough to hold every value exactly, with `extra_bits` spare
  // low-order bits (used for the halvings of the Pauli substitution).
  static DyadicScale covering(std::span<const double> values, int extra_bits = 0);
};

// Overflow-checked int128 addition.
inline int128 checked_add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r))
    throw dyadic_range_error("exact accumulator overflow");
  return r;
}

// Overflow-checked small-integer scaling.
int128 checked_mul(int128 a, long long factor);

// Overflow-checked left shift (exact rescale to a finer grid).
int128 checked_shl(int128 a, int bits);

} // namespace tspqaoa

#endif
