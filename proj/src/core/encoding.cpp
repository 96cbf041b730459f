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

#include "core/encoding.hpp"

#include <bit>
#include <stdexcept>

namespace tspqaoa {

namespace {

int ceil_log2(int n) {
  int k = 0;
  while ((1 << k) < n)
    ++k;
  return k;
}

} // namespace

std::string encoding_name(Encoding e) {
  return e == Encoding::Compact ? "compact" : "onehot";
}

Encoding parse_encoding(const std::string &name) {
  if (name == "compact")
    return Encoding::Compact;
  if (name == "onehot" || name == "one-hot")
    return Encoding::OneHot;
  throw std::invalid_argument("unknown encoding '" + name + "' (expected compact or onehot)");
}

EncodingScheme EncodingScheme::compact(int n) {
  if (n < 2)
    throw std::invalid_argument("EncodingScheme: need at least 2 cities");
  return EncodingScheme{Encoding::Compact, n, std::max(1, ceil_log2(n)), true};
}

EncodingScheme EncodingScheme::onehot(int n) {
  if (n < 2)
    throw std::invalid_argument("EncodingScheme: need at least 2 cities");
  return EncodingScheme{Encoding::OneHot, n, n - 1, true};
}

int qubit_count(const EncodingScheme &scheme) {
  return scheme.qubit_count();
}

DecodeResult decode_assignment(std::uint64_t bits, const EncodingScheme &scheme) {
  const int steps = scheme.steps();
  const int bps = scheme.bits_per_step;
  const std::uint64_t block_mask = (std::uint64_t{1} << bps) - 1;

  DecodeResult res;
  std::vector<bool> seen(static_cast<std::size_t>(scheme.n), false);
  seen[0] = true; // city 0 is fixed at time step 1
  std::vector<int> tour;
  tour.reserve(static_cast<std::size_t>(scheme.n));
  tour.push_back(0);

  for (int t = 0; t < steps; ++t) {
    const std::uint64_t block = (bits >> (t * bps)) & block_mask;
    int city = -1;
    if (scheme.kind == Encoding::Compact) {
      if (block >= static_cast<std::uint64_t>(scheme.n)) {
        res.status = DecodeStatus::BadCode;
        res.reason = "block " + std::to_string(t + 2) + " holds code " + std::to_string(block) +
                     ", not a city";
        return res;
      }
      city = static_cast<int>(block);
      if (city == 0) {
        res.status = DecodeStatus::FixedCityReuse;
        res.reason = "city 0 repeated at time step " + std::to_string(t + 2);
        return res;
      }
    } else {
      if (std::popcount(block) != 1) {
        res.status = DecodeStatus::NotOneHot;
        res.reason = "time step " + std::to_string(t + 2) + " has " +
                     std::to_string(std::popcount(block)) + " cities set";
        return res;
      }
      city = std::countr_zero(block) + 1;
    }
    if (seen[static_cast<std::size_t>(city)]) {
      res.status = DecodeStatus::RepeatedCity;
      res.reason = "city " + std::to_string(city) + " repeated at time step " + std::to_string(t + 2);
      return res;
    }
    seen[static_cast<std::size_t>(city)] = true;
    tour.push_back(city);
  }

  res.tour = std::move(tour);
  return res;
}

std::uint64_t encode_assignment(const std::vector<int> &tour, const EncodingScheme &scheme) {
  if (tour.size() != static_cast<std::size_t>(scheme.n) || tour.front() != 0)
    throw std::invalid_argument("encode_assignment: tour must list all cities starting at 0");
  std::uint64_t bits = 0;
  for (int t = 0; t < scheme.steps(); ++t) {
    const int city = tour[static_cast<std::size_t>(t) + 1];
    if (city <= 0 || city >= scheme.n)
      throw std::invalid_argument("encode_assignment: invalid city id in tour");
    std::uint64_t block = scheme.kind == Encoding::Compact
                              ? static_cast<std::uint64_t>(city)
                              : std::uint64_t{1} << (city - 1);
    bits |= block << (t * scheme.bits_per_step);
  }
  return bits;
}

std::string format_assignment(std::uint64_t bits, const EncodingScheme &scheme) {
  std::string out;
  for (int t = 0; t < scheme.steps(); ++t) {
    if (t > 0)
      out += ' ';
    for (int b = scheme.bits_per_step - 1; b >= 0; --b)
      out += ((bits >> (t * scheme.bits_per_step + b)) & 1) ? '1' : '0';
  }
  return out;
}

} // namespace tspqaoa
