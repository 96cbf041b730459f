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

#ifndef TSPQAOA_CORE_INSTANCE_H
#define TSPQAOA_CORE_INSTANCE_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tspqaoa {

// Placement of random cities: the square plane is split into a 2x2 grid of
// quadrants and each city is drawn from an isotropic normal centered on its
// quadrant midpoint. City i uses quadrant i mod 4.
struct GenConfig {
  double plane_size = 100.0;
  double sigma_squared = 10.0;
  std::uint64_t seed = 0;
};

// Symmetric Euclidean TSP instance. Cities are 0-indexed and the tour always
// starts at city 0.
class TspInstance {
public:
  TspInstance(int n, std::vector<std::array<double, 2>> coords, std::vector<double> w,
              std::optional<GenConfig> generator = std::nullopt);

  // Builds the distance matrix from coordinates.
  static TspInstance from_coords(std::vector<std::array<double, 2>> coords);

  int city_count() const { return n_; }
  double distance(int u, int v) const { return w_[static_cast<std::size_t>(u) * n_ + v]; }
  const std::vector<double> &distance_matrix() const { return w_; }
  const std::vector<std::array<double, 2>> &coords() const { return coords_; }
  const std::optional<GenConfig> &generator() const { return generator_; }

  double max_distance() const;

  bool operator==(const TspInstance &other) const;

private:
  int n_;
  std::vector<std::array<double, 2>> coords_;
  std::vector<double> w_; // row-major n x n
  std::optional<GenConfig> generator_;
};

TspInstance generate_instance(int n, const GenConfig &cfg);

void save_instance(const TspInstance &inst, const std::string &path);
TspInstance load_instance(const std::string &path);

} // namespace tspqaoa

#endif
