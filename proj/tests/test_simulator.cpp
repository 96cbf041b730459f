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

#include <fstream>
#include <random>

#include "core/simulator.hpp"
#include "reference_sim.hpp"
#include "test_util.hpp"

using namespace tspqaoa;

namespace {

EnergyTable random_table(int num_qubits, std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  EnergyTable table;
  table.num_qubits = num_qubits;
  table.energies.resize(std::size_t{1} << num_qubits);
  for (auto &e : table.energies)
    e = dist(rng);
  return table;
}

double max_amplitude_deviation(const Statevector &state,
                               const std::vector<std::complex<double>> &reference) {
  double worst = 0.0;
  for (std::size_t z = 0; z < state.amps.size(); ++z)
    worst = std::max(worst, std::abs(state.amps[z] - reference[z]));
  return worst;
}

} // namespace

TEST_CASE("uniform state is the equal superposition") {
  Statevector one = uniform_state(1);
  CHECK(one.amps.size() == 2);
  CHECK(one.amps[0] == std::complex<double>(1.0 / std::sqrt(2.0), 0.0));
  CHECK(one.amps[1] == one.amps[0]);

  Statevector six = uniform_state(6);
  CHECK(six.amps.size() == 64);
  for (const auto &amp : six.amps)
    CHECK(amp == six.amps[0]);
  CHECK(six.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(uniform_state(0), std::invalid_argument);
  CHECK_THROWS_AS(uniform_state(27), std::invalid_argument);
}

TEST_CASE("zero-angle phase is the identity") {
  std::mt19937_64 rng(3);
  EnergyTable table = random_table(3, rng);
  Statevector state = uniform_state(3);
  Statevector before = state;
  apply_phase(state, table, 0.0);
  for (std::size_t z = 0; z < state.amps.size(); ++z)
    CHECK(state.amps[z] == before.amps[z]);
}

TEST_CASE("constant tables only add a global phase") {
  EnergyTable table;
  table.num_qubits = 2;
  table.energies.assign(4, 1.75);
  Statevector state = uniform_state(2);
  apply_phase(state, table, 0.6);
  const auto expected = std::polar(0.5, -0.6 * 1.75);
  for (const auto &amp : state.amps)
    CHECK(std::abs(amp - expected) < 1e-15);
  auto probs = probabilities(state);
  for (double p : probs)
    CHECK(p == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("phase separator matches the dense diagonal exponential") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 5; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 3);
    EnergyTable table = random_table(n, rng);
    const double gamma = 0.3 + 0.1 * rep;

    Statevector state = uniform_state(n);
    apply_phase(state, table, gamma);

    auto dense = reference::matrix_exponential(
        reference::scaled(reference::problem_hamiltonian(table), {0.0, -gamma}));
    auto expected = reference::apply_matrix(
        dense, std::vector<std::complex<double>>(table.energies.size(),
                                                 {1.0 / std::sqrt(double(table.energies.size())), 0.0}));
    CHECK(max_amplitude_deviation(state, expected) < 1e-12);
  }
}

TEST_CASE("zero-angle mixer is the identity") {
  Statevector state = uniform_state(2);
  state.amps = {{0.5, 0.1}, {0.3, -0.2}, {-0.4, 0.2}, {0.1, 0.6}};
  Statevector before = state;
  apply_mixer(state, 0.0);
  for (std::size_t z = 0; z < state.amps.size(); ++z)
    CHECK(std::abs(state.amps[z] - before.amps[z]) < 1e-15);
}

TEST_CASE("uniform state is an eigenvector of the mixer") {
  Statevector state = uniform_state(3);
  apply_mixer(state, M_PI / 2);
  auto probs = probabilities(state);
  for (double p : probs)
    CHECK(p == doctest::Approx(1.0 / 8.0).epsilon(1e-12));
}

TEST_CASE("mixer matches the dense exponential of the transverse field") {
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 5; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const double beta = -0.8 + 0.35 * rep;

    Statevector state = uniform_state(n);
    // Start from a non-trivial state.
    EnergyTable table = random_table(n, rng);
    apply_phase(state, table, 0.7);
    std::vector<std::complex<double>> start = state.amps;

    apply_mixer(state, beta);

    auto dense = reference::matrix_exponential(
        reference::scaled(reference::mixer_hamiltonian(n), {0.0, -beta}));
    auto expected = reference::apply_matrix(dense, start);
    CHECK(max_amplitude_deviation(state, expected) < 1e-12);
  }
}

TEST_CASE("full circuits match the dense reference") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> angle(-1.5, 1.5);
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 4);
    EnergyTable table = random_table(n, rng);
    QaoaSchedule schedule(1 + rng() % 3);
    for (auto &layer : schedule) {
      layer.gamma = angle(rng);
      layer.beta = angle(rng);
    }
    Statevector state = run_qaoa(table, schedule);
    CHECK(state.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
    auto expected = reference::run_qaoa_dense(table, schedule);
    CHECK(max_amplitude_deviation(state, expected) < 1e-10);
  }
}

TEST_CASE("trivial schedules keep the uniform state") {
  EnergyTable table;
  table.num_qubits = 3;
  table.energies.assign(8, 0.0);
  for (std::size_t z = 0; z < 8; ++z)
    table.energies[z] = static_cast<double>(z);

  Statevector state = run_qaoa(table, {{0.0, 0.0}});
  Statevector expected = uniform_state(3);
  CHECK(max_amplitude_deviation(state, expected.amps) < 1e-15);

  Statevector three = run_qaoa(table, {{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}});
  CHECK(max_amplitude_deviation(three, expected.amps) < 1e-15);

  CHECK_THROWS_AS(run_qaoa(table, {}), std::invalid_argument);
}

TEST_CASE("expectation is the probability-weighted energy") {
  std::mt19937_64 rng(53);
  EnergyTable table = random_table(3, rng);

  Statevector uniform = uniform_state(3);
  CHECK(expectation(uniform, table) == doctest::Approx(table.mean_energy()).epsilon(1e-12));

  Statevector basis = uniform_state(3);
  basis.amps.assign(8, 0.0);
  basis.amps[5] = 1.0;
  CHECK(expectation(basis, table) == table.energies[5]);

  QaoaSchedule schedule{{0.4, -0.3}, {0.2, 0.9}};
  Statevector state = run_qaoa(table, schedule);
  const double value = expectation(state, table);
  CHECK(value >= table.min_energy() - 1e-12);
  CHECK(value <= *std::max_element(table.energies.begin(), table.energies.end()) + 1e-12);
}

TEST_CASE("probabilities sum to one") {
  std::mt19937_64 rng(67);
  EnergyTable table = random_table(4, rng);
  Statevector state = run_qaoa(table, {{0.8, 0.3}, {-0.2, 0.5}});
  auto probs = probabilities(state);
  double total = 0.0;
  for (double p : probs)
    total += p;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dimension mismatches are rejected") {
  EnergyTable table;
  table.num_qubits = 3;
  table.energies.assign(8, 0.0);
  Statevector state = uniform_state(2);
  CHECK_THROWS_AS(apply_phase(state, table, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(expectation(state, table), std::invalid_argument);
}

TEST_CASE("statevector dump writes index and amplitude per line") {
  TempDir dir("statevector");
  Statevector state = uniform_state(1);
  save_statevector(state, dir.file("state.txt"));
  std::ifstream in(dir.file("state.txt"));
  std::size_t index = 99;
  double re = 0.0, im = 1.0;
  in >> index >> re >> im;
  CHECK(index == 0);
  CHECK(re == state.amps[0].real());
  CHECK(im == 0.0);
}
