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

#include "core/instance.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace tspqaoa {

namespace {

// Box-Muller on top of mt19937_64, so instances are reproducible across
// standard-library implementations (std::normal_distribution is not pinned
// by the standard).
class NormalSampler {
public:
  explicit NormalSampler(std::uint64_t seed) : rng_(seed) {}

  std::array<double, 2> pair(double mean_x, double mean_y, double sigma) {
    double u1 = 0.0;
    do {
      u1 = uniform01();
    } while (u1 == 0.0);
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double z0 = r * std::cos(2.0 * M_PI * u2);
    double z1 = r * std::sin(2.0 * M_PI * u2);
    return {mean_x + sigma * z0, mean_y + sigma * z1};
  }

private:
  double uniform01() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 rng_;
};

std::vector<double> euclidean_matrix(const std::vector<std::array<double, 2>> &coords) {
  const int n = static_cast<int>(coords.size());
  std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      double dx = coords[u][0] - coords[v][0];
      double dy = coords[u][1] - coords[v][1];
      double d = std::hypot(dx, dy);
      w[static_cast<std::size_t>(u) * n + v] = d;
      w[static_cast<std::size_t>(v) * n + u] = d;
    }
  }
  return w;
}

} // namespace

TspInstance::TspInstance(int n, std::vector<std::array<double, 2>> coords, std::vector<double> w,
                         std::optional<GenConfig> generator)
    : n_(n), coords_(std::move(coords)), w_(std::move(w)), generator_(generator) {
  if (n_ < 2)
    throw std::invalid_argument("TspInstance: need at least 2 cities");
  if (coords_.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("TspInstance: coords size does not match n");
  if (w_.size() != static_cast<std::size_t>(n_) * n_)
    throw std::invalid_argument("TspInstance: W size does not match n");
  for (int u = 0; u < n_; ++u) {
    if (w_[static_cast<std::size_t>(u) * n_ + u] != 0.0)
      throw std::invalid_argument("TspInstance: W diagonal not zero");
    for (int v = 0; v < n_; ++v) {
      double d = w_[static_cast<std::size_t>(u) * n_ + v];
      if (!std::isfinite(d) || d < 0.0)
        throw std::invalid_argument("TspInstance: W entries must be finite and nonnegative");
      if (d != w_[static_cast<std::size_t>(v) * n_ + u])
        throw std::invalid_argument("TspInstance: W not symmetric");
    }
  }
}

TspInstance TspInstance::from_coords(std::vector<std::array<double, 2>> coords) {
  const int n = static_cast<int>(coords.size());
  auto w = euclidean_matrix(coords);
  return TspInstance(n, std::move(coords), std::move(w));
}

double TspInstance::max_distance() const {
  double m = 0.0;
  for (double d : w_)
    m = std::max(m, d);
  return m;
}

bool TspInstance::operator==(const TspInstance &other) const {
  return n_ == other.n_ && coords_ == other.coords_ && w_ == other.w_;
}

TspInstance generate_instance(int n, const GenConfig &cfg) {
  if (n < 2)
    throw std::invalid_argument("generate_instance: need at least 2 cities");
  if (!(cfg.sigma_squared > 0.0))
    throw std::invalid_argument("generate_instance: variance must be positive");
  if (!(cfg.plane_size > 0.0))
    throw std::invalid_argument("generate_instance: plane size must be positive");

  const double lo = cfg.plane_size / 4.0;
  const double hi = 3.0 * cfg.plane_size / 4.0;
  const std::array<std::array<double, 2>, 4> midpoints = {{{lo, lo}, {lo, hi}, {hi, lo}, {hi, hi}}};
  const double sigma = std::sqrt(cfg.sigma_squared);

  NormalSampler sampler(cfg.seed);
  std::vector<std::array<double, 2>> coords;
  coords.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto &m = midpoints[static_cast<std::size_t>(i % 4)];
    coords.push_back(sampler.pair(m[0], m[1], sigma));
  }
  auto w = euclidean_matrix(coords);
  return TspInstance(n, std::move(coords), std::move(w), cfg);
}

void save_instance(const TspInstance &inst, const std::string &path) {
  nlohmann::ordered_json j;
  j["n"] = inst.city_count();
  auto coords = nlohmann::ordered_json::array();
  for (const auto &c : inst.coords())
    coords.push_back({c[0], c[1]});
  j["coords"] = std::move(coords);
  auto w = nlohmann::ordered_json::array();
  const int n = inst.city_count();
  for (int u = 0; u < n; ++u) {
    auto row = nlohmann::ordered_json::array();
    for (int v = 0; v < n; ++v)
      row.push_back(inst.distance(u, v));
    w.push_back(std::move(row));
  }
  j["W"] = std::move(w);
  if (inst.generator()) {
    j["seed"] = inst.generator()->seed;
    j["generator"] = {{"plane_size", inst.generator()->plane_size},
                      {"sigma_squared", inst.generator()->sigma_squared}};
  }

  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("save_instance: cannot open " + path);
  out << j.dump(2) << '\n';
  if (!out)
    throw std::runtime_error("save_instance: write failed for " + path);
}

TspInstance load_instance(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("load_instance: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception &e) {
    throw std::runtime_error("load_instance: invalid JSON in " + path + ": " + e.what());
  }

  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::runtime_error("load_instance: missing or non-integer field 'n'");
  const int n = j["n"].get<int>();
  if (n < 2)
    throw std::runtime_error("load_instance: field 'n' must be at least 2");

  if (!j.contains("coords") || !j["coords"].is_array() || j["coords"].size() != static_cast<std::size_t>(n))
    throw std::runtime_error("load_instance: field 'coords' must be an array of n [x, y] pairs");
  std::vector<std::array<double, 2>> coords;
  coords.reserve(static_cast<std::size_t>(n));
  for (const auto &c : j["coords"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number())
      throw std::runtime_error("load_instance: field 'coords' entries must be [x, y] pairs");
    coords.push_back({c[0].get<double>(), c[1].get<double>()});
  }

  if (!j.contains("W") || !j["W"].is_array() || j["W"].size() != static_cast<std::size_t>(n))
    throw std::runtime_error("load_instance: field 'W' must be an n x n array");
  std::vector<double> w;
  w.reserve(static_cast<std::size_t>(n) * n);
  for (const auto &row : j["W"]) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw std::runtime_error("load_instance: field 'W' rows must have length n");
    for (const auto &entry : row) {
      if (!entry.is_number())
        throw std::runtime_error("load_instance: field 'W' entries must be numbers");
      w.push_back(entry.get<double>());
    }
  }

  std::optional<GenConfig> gen;
  if (j.contains("generator")) {
    GenConfig g;
    const auto &jg = j["generator"];
    if (jg.contains("plane_size"))
      g.plane_size = jg["plane_size"].get<double>();
    if (jg.contains("sigma_squared"))
      g.sigma_squared = jg["sigma_squared"].get<double>();
    if (j.contains("seed"))
      g.seed = j["seed"].get<std::uint64_t>();
    gen = g;
  }

  // Distances are taken from the file as-is, not recomputed from coords.
  try {
    return TspInstance(n, std::move(coords), std::move(w), gen);
  } catch (const std::invalid_argument &e) {
    // Surface invariant violations with the field name attached.
    throw std::runtime_error(std::string("load_instance: field 'W' invalid: ") + e.what());
  }
}

} // namespace tspqaoa
