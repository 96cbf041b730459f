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

#include "core/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace tspqaoa {

namespace {

void check_config(const OptConfig &cfg) {
  if (cfg.hops < 1)
    throw std::invalid_argument("OptConfig: hops must be at least 1");
  if (!(cfg.step_size > 0.0) || !(cfg.temperature > 0.0) || !(cfg.local_tolerance > 0.0))
    throw std::invalid_argument("OptConfig: step size, temperature and tolerance must be positive");
  if (cfg.max_local_iters < 1)
    throw std::invalid_argument("OptConfig: max_local_iters must be at least 1");
}

double checked_eval(const Objective &f, const std::vector<double> &x) {
  double v = f(x);
  if (!std::isfinite(v))
    throw std::runtime_error("objective returned a non-finite value");
  return v;
}

double simplex_diameter(const std::vector<std::vector<double>> &pts) {
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      double s = 0.0;
      for (std::size_t c = 0; c < pts[i].size(); ++c)
        s += (pts[i][c] - pts[j][c]) * (pts[i][c] - pts[j][c]);
      d = std::max(d, std::sqrt(s));
    }
  return d;
}

} // namespace

MinimizeResult local_minimize(const Objective &f, const std::vector<double> &x0,
                              const OptConfig &cfg) {
  check_config(cfg);
  const std::size_t dim = x0.size();
  if (dim == 0)
    throw std::invalid_argument("local_minimize: empty start point");

  constexpr double kAlpha = 1.0, kGamma = 2.0, kRho = 0.5, kSigma = 0.5;
  constexpr double kInitialStep = 0.25;

  std::vector<std::vector<double>> x(dim + 1, x0);
  for (std::size_t i = 0; i < dim; ++i)
    x[i + 1][i] += kInitialStep;
  std::vector<double> fx(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i)
    fx[i] = checked_eval(f, x[i]);

  for (int iter = 0; iter < cfg.max_local_iters; ++iter) {
    // Order the simplex best to worst.
    std::vector<std::size_t> idx(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i)
      idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
    {
      std::vector<std::vector<double>> xs(dim + 1);
      std::vector<double> fs(dim + 1);
      for (std::size_t i = 0; i <= dim; ++i) {
        xs[i] = x[idx[i]];
        fs[i] = fx[idx[i]];
      }
      x.swap(xs);
      fx.swap(fs);
    }

    if (simplex_diameter(x) < cfg.local_tolerance)
      break;

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t c = 0; c < dim; ++c)
        centroid[c] += x[i][c] / static_cast<double>(dim);

    auto blend = [&](double t) {
      std::vector<double> p(dim);
      for (std::size_t c = 0; c < dim; ++c)
        p[c] = centroid[c] + t * (centroid[c] - x[dim][c]);
      return p;
    };

    auto reflected = blend(kAlpha);
    double fr = checked_eval(f, reflected);
    if (fr < fx[0]) {
      auto expanded = blend(kGamma);
      double fe = checked_eval(f, expanded);
      if (fe < fr) {
        x[dim] = std::move(expanded);
        fx[dim] = fe;
      } else {
        x[dim] = std::move(reflected);
        fx[dim] = fr;
      }
    } else if (fr < fx[dim - 1]) {
      x[dim] = std::move(reflected);
      fx[dim] = fr;
    } else {
      auto contracted = blend(fr < fx[dim] ? kRho : -kRho);
      double fc = checked_eval(f, contracted);
      if (fc < std::min(fr, fx[dim])) {
        x[dim] = std::move(contracted);
        fx[dim] = fc;
      } else {
        // Shrink toward the best vertex.
        for (std::size_t i = 1; i <= dim; ++i) {
          for (std::size_t c = 0; c < dim; ++c)
            x[i][c] = x[0][c] + kSigma * (x[i][c] - x[0][c]);
          fx[i] = checked_eval(f, x[i]);
        }
      }
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i <= dim; ++i)
    if (fx[i] < fx[best])
      best = i;
  // The start point is a simplex vertex, so the result never regresses.
  return {x[best], fx[best]};
}

MinimizeResult basin_hopping(const Objective &f, const std::vector<double> &x0,
                             const OptConfig &cfg) {
  check_config(cfg);
  std::mt19937_64 rng(cfg.seed);
  auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  MinimizeResult current = local_minimize(f, x0, cfg);
  MinimizeResult best = current;

  std::vector<double> candidate(x0.size());
  for (int hop = 0; hop < cfg.hops; ++hop) {
    for (std::size_t c = 0; c < candidate.size(); ++c)
      candidate[c] = current.x[c] + cfg.step_size * (2.0 * uniform() - 1.0);
    MinimizeResult trial = local_minimize(f, candidate, cfg);

    if (trial.value < best.value)
      best = trial;

    // Metropolis acceptance; the uniform draw happens unconditionally to
    // keep the random stream independent of objective values.
    const double u = uniform();
    const double delta = trial.value - current.value;
    if (delta <= 0.0 || u < std::exp(-delta / cfg.temperature))
      current = std::move(trial);
  }
  return best;
}

TrainResult layerwise_train(const EnergyTable &table, int layers, const OptConfig &cfg) {
  if (layers < 1)
    throw std::invalid_argument("layerwise_train: need at least one layer");
  check_config(cfg);

  TrainResult result;
  result.schedule.reserve(static_cast<std::size_t>(layers));

  // State after the frozen prefix; layer p only ever sees this state, so one
  // objective evaluation costs a single layer regardless of p.
  Statevector prefix = uniform_state(table.num_qubits);
  result.best_value = expectation(prefix, table);

  for (int p = 0; p < layers; ++p) {
    auto objective = [&](const std::vector<double> &params) {
      Statevector state = prefix;
      apply_phase(state, table, params[0]);
      apply_mixer(state, params[1]);
      return expectation(state, table);
    };

    OptConfig layer_cfg = cfg;
    // Decorrelate the per-layer searches while keeping the run reproducible.
    layer_cfg.seed = cfg.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(p + 1);

    MinimizeResult lm = basin_hopping(objective, {0.0, 0.0}, layer_cfg);
    // (0, 0) is the identity layer, so the trained value can only improve.
    if (lm.value > result.best_value) {
      lm.x = {0.0, 0.0};
      lm.value = result.best_value;
    }

    result.schedule.push_back({lm.x[0], lm.x[1]});
    result.best_value = lm.value;
    result.per_layer_history.emplace_back(p + 1, lm.value);

    apply_phase(prefix, table, lm.x[0]);
    apply_mixer(prefix, lm.x[1]);
  }
  return result;
}

} // namespace tspqaoa
