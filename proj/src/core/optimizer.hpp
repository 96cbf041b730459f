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

#ifndef TSPQAOA_CORE_OPTIMIZER_H
#define TSPQAOA_CORE_OPTIMIZER_H

#include <cstdint>
#include <functional>
#include <vector>

#include "core/simulator.hpp"

namespace tspqaoa {

struct OptConfig {
  int hops = 500;               // basin-hopping outer iterations
  double step_size = 0.3;      // perturbation half-width, radians
  double temperature = 1.0;    // Metropolis acceptance temperature
  double local_tolerance = 1e-6;
  int max_local_iters = 200;
  std::uint64_t seed = 0;
};

using Objective = std::function<double(const std::vector<double> &)>;

struct MinimizeResult {
  std::vector<double> x;
  double value = 0.0;
};

// Derivative-free simplex descent (Nelder-Mead). Deterministic; stops when
// the simplex diameter falls below the tolerance or the iteration cap is
// reached. Never returns a value above f(x0).
MinimizeResult local_minimize(const Objective &f, const std::vector<double> &x0,
                              const OptConfig &cfg);

// Global search: repeat {perturb uniformly, relax locally, Metropolis
// accept}; returns the best point ever visited. Fully reproducible from
// cfg.seed.
MinimizeResult basin_hopping(const Objective &f, const std::vector<double> &x0,
                             const OptConfig &cfg);

struct TrainResult {
  QaoaSchedule schedule;
  double best_value = 0.0;
  // (layer count, best expectation after training that layer); non-increasing.
  std::vector<std::pair<int, double>> per_layer_history;
};

// Layerwise protocol: layers are trained one at a time, earlier layers stay
// frozen at their trained values, and the new layer starts at (0, 0) - the
// identity - so each layer can only improve on the previous one.
TrainResult layerwise_train(const EnergyTable &table, int layers, const OptConfig &cfg);

} // namespace tspqaoa

#endif
