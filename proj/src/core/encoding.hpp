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

#ifndef TSPQAOA_CORE_ENCODING_H
#define TSPQAOA_CORE_ENCODING_H

#include <cstdint>
#include <string>
#include <vector>

namespace tspqaoa {

enum class Encoding { Compact, OneHot };

std::string encoding_name(Encoding e);
Encoding parse_encoding(const std::string &name);

// Variable layout for a TSP register with city 0 fixed at time step 1.
// Variables cover time steps 2..n as consecutive blocks, one block per step:
//   compact: k = ceil(log2 n) bits per block, block value = 0-based city id,
//   one-hot: n-1 bits per block, bit c-1 set <=> city c occupies the step.
// Bit q of a basis-state index is variable q.
struct EncodingScheme {
  Encoding kind = Encoding::Compact;
  int n = 0;          // city count
  int bits_per_step = 0;
  bool fixed_first_city = true;

  static EncodingScheme compact(int n);
  static EncodingScheme onehot(int n);

  int qubit_count() const { return (n - 1) * bits_per_step; }
  int steps() const { return n - 1; }
};

int qubit_count(const EncodingScheme &scheme);

enum class DecodeStatus {
  Valid,
  BadCode,       // compact block value >= n
  FixedCityReuse, // compact block equal to the fixed city's code
  RepeatedCity,
  NotOneHot, // one-hot block with zero or several bits set
};

struct DecodeResult {
  DecodeStatus status = DecodeStatus::Valid;
  std::vector<int> tour; // starts at city 0; filled only when valid
  std::string reason;    // empty when valid

  bool valid() const { return status == DecodeStatus::Valid; }
};

// Reads a basis-state index as a city sequence. The bit count of `bits` is
// fixed by the scheme (qubit_count); callers index tables directly.
DecodeResult decode_assignment(std::uint64_t bits, const EncodingScheme &scheme);

// Inverse of decode_assignment for a valid tour starting at city 0.
std::uint64_t encode_assignment(const std::vector<int> &tour, const EncodingScheme &scheme);

// Renders the register as per-step blocks, most significant bit first inside
// each block, time steps left to right, e.g. "01 10 11".
std::string format_assignment(std::uint64_t bits, const EncodingScheme &scheme);

} // namespace tspqaoa

#endif
