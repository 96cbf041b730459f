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

#include "core/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tspqaoa {

BinaryPolynomial::BinaryPolynomial(int num_vars, DyadicScale scale)
    : num_vars_(num_vars), scale_(scale) {
  if (num_vars < 0)
    throw std::invalid_argument("BinaryPolynomial: negative variable count");
}

int BinaryPolynomial::max_term_weight() const {
  int w = 0;
  for (const auto &[key, mant] : terms_)
    w = std::max(w, static_cast<int>(key.size()));
  return w;
}

void BinaryPolynomial::add_mantissa(const TermKey &key, int128 mantissa) {
  if (!key.empty() && key.back() >= num_vars_)
    throw std::invalid_argument("BinaryPolynomial: variable index out of range");
  if (!std::is_sorted(key.begin(), key.end()) || std::adjacent_find(key.begin(), key.end()) != key.end())
    throw std::invalid_argument("BinaryPolynomial: term indices must be strictly increasing");
  if (mantissa == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(key, mantissa);
  if (!inserted) {
    it->second = checked_add(it->second, mantissa);
    if (it->second == 0)
      terms_.erase(it);
  }
}

void BinaryPolynomial::add_mantissa(std::uint64_t mask, int128 mantissa) {
  add_mantissa(mask_to_key(mask), mantissa);
}

void BinaryPolynomial::add(const TermKey &key, double coefficient) {
  add_mantissa(key, scale_.encode(coefficient));
}

double BinaryPolynomial::coefficient(const TermKey &key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? 0.0 : scale_.decode(it->second);
}

int128 BinaryPolynomial::evaluate_mantissa(std::uint64_t assignment) const {
  if (num_vars_ > 63)
    throw std::invalid_argument("BinaryPolynomial: evaluation needs at most 63 variables");
  int128 acc = 0;
  for (const auto &[key, mant] : terms_) {
    std::uint64_t mask = key_to_mask(key);
    if ((assignment & mask) == mask)
      acc = checked_add(acc, mant);
  }
  return acc;
}

double BinaryPolynomial::evaluate(std::uint64_t assignment) const {
  return scale_.decode(evaluate_mantissa(assignment));
}

void BinaryPolynomial::prune_zeros() {
  std::erase_if(terms_, [](const auto &kv) { return kv.second == 0; });
}

std::uint64_t BinaryPolynomial::key_to_mask(const TermKey &key) {
  std::uint64_t mask = 0;
  for (auto idx : key)
    mask |= std::uint64_t{1} << idx;
  return mask;
}

TermKey BinaryPolynomial::mask_to_key(std::uint64_t mask) {
  TermKey key;
  while (mask != 0) {
    auto idx = static_cast<std::uint16_t>(std::countr_zero(mask));
    key.push_back(idx);
    mask &= mask - 1;
  }
  return key;
}

double EnergyTable::min_energy() const {
  return energies[argmin()];
}

std::uint64_t EnergyTable::argmin() const {
  if (energies.empty())
    throw std::logic_error("EnergyTable: empty");
  return static_cast<std::uint64_t>(
      std::min_element(energies.begin(), energies.end()) - energies.begin());
}

double EnergyTable::mean_energy() const {
  double acc = 0.0;
  for (double e : energies)
    acc += e;
  return acc / static_cast<double>(energies.size());
}

namespace {

void check_table_size(const BinaryPolynomial &poly) {
  if (poly.num_vars() > kMaxTableQubits)
    throw std::invalid_argument("energy_table: more than 26 variables");
}

} // namespace

EnergyTable energy_table(const BinaryPolynomial &poly) {
  check_table_size(poly);
  const int n = poly.num_vars();
  const std::size_t size = std::size_t{1} << n;

  std::vector<int128> acc(size, 0);
  for (const auto &[key, mant] : poly.terms())
    acc[BinaryPolynomial::key_to_mask(key)] = checked_add(acc[BinaryPolynomial::key_to_mask(key)], mant);

  for (int b = 0; b < n; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t z = 0; z < size; ++z)
      if (z & bit)
        acc[z] = checked_add(acc[z], acc[z ^ bit]);
  }

  EnergyTable table;
  table.num_qubits = n;
  table.energies.resize(size);
  for (std::size_t z = 0; z < size; ++z)
    table.energies[z] = poly.scale().decode(acc[z]);
  return table;
}

EnergyTable energy_table_direct(const BinaryPolynomial &poly) {
  check_table_size(poly);
  const std::size_t size = std::size_t{1} << poly.num_vars();
  EnergyTable table;
  table.num_qubits = poly.num_vars();
  table.energies.resize(size);
  for (std::size_t z = 0; z < size; ++z)
    table.energies[z] = poly.evaluate(z);
  return table;
}

void save_polynomial(const BinaryPolynomial &poly, const std::string &path) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("save_polynomial: cannot open " + path);
  out << "# tspqaoa polynomial\n";
  out << "vars " << poly.num_vars() << "\n";
  char buf[64];
  for (const auto &[key, mant] : poly.terms()) {
    for (auto idx : key)
      out << idx << ' ';
    std::snprintf(buf, sizeof buf, "%.17g", poly.scale().decode(mant));
    out << buf << "\n";
  }
  if (!out)
    throw std::runtime_error("save_polynomial: write failed for " + path);
}

BinaryPolynomial load_polynomial(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("load_polynomial: cannot open " + path);

  int num_vars = -1;
  std::vector<std::pair<TermKey, double>> entries;
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#')
      continue;
    std::istringstream ls(line);
    if (num_vars < 0) {
      std::string tag;
      ls >> tag >> num_vars;
      if (tag != "vars" || !ls || num_vars < 0)
        throw std::runtime_error("load_polynomial: expected 'vars N' header in " + path);
      continue;
    }
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok)
      tokens.push_back(tok);
    if (tokens.empty())
      continue;
    TermKey key;
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
      std::size_t used = 0;
      int idx = std::stoi(tokens[i], &used);
      if (used != tokens[i].size() || idx < 0)
        throw std::runtime_error("load_polynomial: bad variable index on line " + std::to_string(line_no));
      key.push_back(static_cast<std::uint16_t>(idx));
    }
    std::size_t used = 0;
    double coeff = std::stod(tokens.back(), &used);
    if (used != tokens.back().size())
      throw std::runtime_error("load_polynomial: bad coefficient on line " + std::to_string(line_no));
    std::sort(key.begin(), key.end());
    entries.emplace_back(std::move(key), coeff);
    values.push_back(coeff);
  }
  if (num_vars < 0)
    throw std::runtime_error("load_polynomial: missing 'vars N' header in " + path);

  BinaryPolynomial poly(num_vars, DyadicScale::covering(values));
  for (const auto &[key, coeff] : entries)
    poly.add(key, coeff);
  return poly;
}

} // namespace tspqaoa
