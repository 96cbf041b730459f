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

#ifndef TSPQAOA_CORE_EXPERIMENT_H
#define TSPQAOA_CORE_EXPERIMENT_H

#include <string>
#include <vector>

#include "core/encoding.hpp"
#include "core/formulation.hpp"
#include "core/instance.hpp"
#include "core/metrics.hpp"
#include "core/optimizer.hpp"

namespace tspqaoa {

// A trained run together with everything needed to reproduce it against its
// instance file.
struct TrainRunRecord {
  Encoding encoding = Encoding::Compact;
  int n = 0;
  OneHotConfig onehot_weights{0.0, 0.0}; // meaningful for the one-hot encoding
  CompactConfig compact_weights{0.0};    // meaningful for the compact encoding
  OptConfig opt;
  TrainResult result;
};

void save_train_result(const TrainRunRecord &record, const std::string &path);
TrainRunRecord load_train_result(const std::string &path);

struct MetricsRow {
  int sample = 0;
  Encoding encoding = Encoding::Compact;
  int layers = 0;
  RunMetrics metrics;
};

// CSV with header `sample,encoding,layers,ar,true_pct,rank`.
void save_metrics_csv(const std::vector<MetricsRow> &rows, const std::string &path);
std::vector<MetricsRow> load_metrics_csv(const std::string &path);

struct ExperimentConfig {
  int n = 4;
  int samples = 10;
  int max_layers = 5;
  std::vector<Encoding> encodings = {Encoding::Compact, Encoding::OneHot};
  GenConfig gen;              // gen.seed is the base seed; sample i uses base + i
  OptConfig opt;
  std::string out_dir;
};

// Per sample: generate, solve exactly, build both Hamiltonians, train
// layerwise, and score every layer count. Persists one instance file and one
// result file per (sample, encoding) plus the aggregate metrics.csv whose
// path is returned. A failing sample is logged and skipped; the others
// proceed.
std::string run_experiment(const ExperimentConfig &cfg);

// Three line charts (approximation ratio, true percentage, rank vs layer
// count; one series per encoding, mean over samples) next to the CSV.
std::vector<std::string> emit_plots(const std::string &csv_path, const std::string &out_dir);

} // namespace tspqaoa

#endif
