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

#include <doctest.h>

#include <bit>
#include <fstream>
#include <map>

#include "core/formulation.hpp"
#include "core/instance.hpp"
#include "core/pauli.hpp"
#include "test_util.hpp"

using namespace tspqaoa;

namespace {

// Independent Z-coefficient oracle: Walsh transform of the dense energy
// table, c_S = 2^-N sum_z E(z) (-1)^popcount(S & z). Works on the table side
// only, so it shares nothing with pauli_expand's coefficient algebra.
std::map<std::uint64_t, double> walsh_from_table(const EnergyTable &table) {
  std::vector<double> c = table.energies;
  const std::size_t size = c.size();
  for (int b = 0; b < table.num_qubits; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t m = 0; m < size; ++m) {
      if (m & bit)
        continue;
      const double x = c[m], y = c[m | bit];
      c[m] = x + y;
      c[m | bit] = x - y;
    }
  }
  std::map<std::uint64_t, double> out;
  double max_abs = 0.0;
  for (std::size_t m = 0; m < size; ++m)
    max_abs = std::max(max_abs, std::abs(c[m]));
  for (std::size_t m = 0; m < size; ++m) {
    const double v = c[m] / static_cast<double>(size);
    if (std::abs(c[m]) > 1e-9 * std::max(1.0, max_abs))
      out[m] = v;
  }
  return out;
}

} // namespace

TEST_CASE("single-variable substitution gives (I - Z)/2") {
  BinaryPolynomial poly(2, DyadicScale{-4});
  poly.add({1}, 1.0); // x_1
  PauliPolynomial pp = pauli_expand(poly);
  CHECK(pp.term_count() == 2);
  CHECK(pp.coefficient({}) == 0.5);
  CHECK(pp.coefficient({1}) == -0.5);
}

TEST_CASE("two-variable product expands to the 1/4 combination") {
  BinaryPolynomial poly(2, DyadicScale{-4});
  poly.add({0, 1}, 1.0); // x_0 x_1
  PauliPolynomial pp = pauli_expand(poly);
  CHECK(pp.term_count() == 4);
  CHECK(pp.coefficient({}) == 0.25);
  CHECK(pp.coefficient({0}) == -0.25);
  CHECK(pp.coefficient({1}) == -0.25);
  CHECK(pp.coefficient({0, 1}) == 0.25);
}

TEST_CASE("pauli spectrum equals the energy table for both encodings") {
  GenConfig cfg;
  cfg.seed = 5;
  TspInstance inst = generate_instance(4, cfg);

  for (bool compact : {true, false}) {
    BinaryPolynomial poly = compact ? build_compact_energy(inst, default_compact_config(inst))
                                    : build_onehot_energy(inst, default_onehot_config(inst));
    EnergyTable table = energy_table(poly);
    PauliPolynomial pp = pauli_expand(poly);
    for (std::uint64_t z = 0; z < table.energies.size(); ++z)
      CHECK(pp.evaluate(z) == table.energies[z]);
  }
}

TEST_CASE("gate counts follow the CNOT ladder rule") {
  BinaryPolynomial poly(3, DyadicScale{-4});
  poly.add({}, 7.0);     // identity, no gates
  poly.add({0, 1}, 1.0); // becomes I, Z0, Z1, Z0Z1
  PauliPolynomial pp = pauli_expand(poly);
  GateCounts counts = gate_count(pp);
  CHECK(counts.rotations == 3);
  CHECK(counts.two_qubit_gates == 2); // only the weight-2 ladder
  CHECK(counts.weight_histogram.at(1) == 2);
  CHECK(counts.weight_histogram.at(2) == 1);
}

TEST_CASE("gate counts match the table-side Walsh oracle") {
  GenConfig cfg;
  cfg.seed = 31;
  TspInstance inst = generate_instance(4, cfg);

  for (bool compact : {false, true}) {
    BinaryPolynomial poly = compact ? build_compact_energy(inst, default_compact_config(inst))
                                    : build_onehot_energy(inst, default_onehot_config(inst));
    PauliPolynomial pp = pauli_expand(poly);
    auto oracle = walsh_from_table(energy_table(poly));

    REQUIRE(pp.term_count() == oracle.size());
    std::uint64_t rotations = 0, two_qubit = 0;
    std::map<int, std::uint64_t> histogram;
    for (const auto &[mask, value] : oracle) {
      const int w = std::popcount(mask);
      CHECK(pp.coefficient(BinaryPolynomial::mask_to_key(mask)) ==
            doctest::Approx(value).epsilon(1e-9));
      if (w >= 1) {
        rotations += 1;
        two_qubit += 2 * static_cast<std::uint64_t>(w - 1);
        histogram[w] += 1;
      }
    }
    GateCounts counts = gate_count(pp);
    CHECK(counts.rotations == rotations);
    CHECK(counts.two_qubit_gates == two_qubit);
    CHECK(counts.weight_histogram == histogram);
  }
}

TEST_CASE("compact gate counts outgrow one-hot counts with n") {
  std::vector<double> ratios;
  std::uint64_t prev_compact = 0, prev_onehot = 0;
  for (int n : {4, 8, 16}) {
    GenConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(n);
    TspInstance inst = generate_instance(n, cfg);

    GateCounts compact = gate_count(pauli_expand(build_compact_energy(inst, default_compact_config(inst))));
    GateCounts onehot = gate_count(pauli_expand(build_onehot_energy(inst, default_onehot_config(inst))));

    CHECK(compact.two_qubit_gates > prev_compact);
    CHECK(onehot.two_qubit_gates > prev_onehot);
    prev_compact = compact.two_qubit_gates;
    prev_onehot = onehot.two_qubit_gates;

    ratios.push_back(static_cast<double>(compact.two_qubit_gates) /
                     static_cast<double>(onehot.two_qubit_gates));
  }
  // n^4 log2(n) against n^3: the ratio grows like n log n.
  CHECK(ratios[1] > ratios[0]);
  CHECK(ratios[2] > ratios[1]);
}

TEST_CASE("pauli export mirrors the polynomial text format") {
  TempDir dir("pauli");
  BinaryPolynomial poly(2, DyadicScale{-4});
  poly.add({0}, 1.0);
  PauliPolynomial pp = pauli_expand(poly);
  save_pauli(pp, dir.file("pauli.txt"));

  std::ifstream in(dir.file("pauli.txt"));
  std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(all.find("qubits 2") != std::string::npos);
  CHECK(all.find("0.5") != std::string::npos);
  CHECK(all.find("-0.5") != std::string::npos);
}
