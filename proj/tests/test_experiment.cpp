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

#include <filesystem>
#include <fstream>

#include "core/experiment.hpp"
#include "test_util.hpp"

using namespace tspqaoa;

namespace {

std::string slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

ExperimentConfig tiny_config(const std::string &out_dir) {
  ExperimentConfig cfg;
  cfg.n = 4;
  cfg.samples = 2;
  cfg.max_layers = 2;
  cfg.gen.seed = 3;
  cfg.opt.hops = 3;
  cfg.opt.seed = 9;
  cfg.out_dir = out_dir;
  return cfg;
}

} // namespace

TEST_CASE("train result records round-trip through JSON") {
  TempDir dir("results");
  TrainRunRecord record;
  record.encoding = Encoding::Compact;
  record.n = 4;
  record.compact_weights = {321.5};
  record.opt.hops = 12;
  record.opt.seed = 99;
  record.result.schedule = {{0.25, -0.5}, {1.5, 0.125}};
  record.result.best_value = 6.75;
  record.result.per_layer_history = {{1, 8.5}, {2, 6.75}};
  save_train_result(record, dir.file("r.json"));

  TrainRunRecord loaded = load_train_result(dir.file("r.json"));
  CHECK(loaded.encoding == Encoding::Compact);
  CHECK(loaded.n == 4);
  CHECK(loaded.compact_weights.penalty == 321.5);
  CHECK(loaded.opt.hops == 12);
  CHECK(loaded.opt.seed == 99);
  REQUIRE(loaded.result.schedule.size() == 2);
  CHECK(loaded.result.schedule[1].gamma == 1.5);
  CHECK(loaded.result.schedule[1].beta == 0.125);
  CHECK(loaded.result.best_value == 6.75);
  CHECK(loaded.result.per_layer_history == record.result.per_layer_history);

  CHECK_THROWS_AS(load_train_result(dir.file("missing.json")), std::runtime_error);
}

TEST_CASE("metrics CSV round-trips") {
  TempDir dir("csv");
  std::vector<MetricsRow> rows;
  MetricsRow row;
  row.sample = 3;
  row.encoding = Encoding::OneHot;
  row.layers = 2;
  row.metrics = {1.25, 0.0625, 7};
  rows.push_back(row);
  save_metrics_csv(rows, dir.file("m.csv"));

  auto loaded = load_metrics_csv(dir.file("m.csv"));
  REQUIRE(loaded.size() == 1);
  CHECK(loaded[0].sample == 3);
  CHECK(loaded[0].encoding == Encoding::OneHot);
  CHECK(loaded[0].layers == 2);
  CHECK(loaded[0].metrics.approximation_ratio == 1.25);
  CHECK(loaded[0].metrics.true_percentage == 0.0625);
  CHECK(loaded[0].metrics.rank == 7);

  const std::string bad = dir.file("bad.csv");
  {
    std::ofstream out(bad);
    out << "sample,encoding,layers,ar,true_pct,rank\n1,compact,1,nope\n";
  }
  CHECK_THROWS_AS(load_metrics_csv(bad), std::runtime_error);
}

TEST_CASE("a small experiment produces the full row grid") {
  TempDir dir("experiment");
  ExperimentConfig cfg = tiny_config(dir.path());
  const std::string csv = run_experiment(cfg);

  auto rows = load_metrics_csv(csv);
  CHECK(rows.size() == 2u * 2u * 2u); // samples x encodings x layers
  for (const auto &row : rows) {
    CHECK(row.metrics.true_percentage >= 0.0);
    CHECK(row.metrics.true_percentage <= 1.0);
    CHECK(row.metrics.rank >= 1);
    CHECK(row.metrics.approximation_ratio > 0.0);
  }

  CHECK(std::filesystem::exists(dir.file("instance_000.json")));
  CHECK(std::filesystem::exists(dir.file("instance_001.json")));
  CHECK(std::filesystem::exists(dir.file("result_000_compact.json")));
  CHECK(std::filesystem::exists(dir.file("result_001_onehot.json")));
}

TEST_CASE("experiments are byte-reproducible") {
  TempDir dir_a("experiment_a");
  TempDir dir_b("experiment_b");
  const std::string csv_a = run_experiment(tiny_config(dir_a.path()));
  const std::string csv_b = run_experiment(tiny_config(dir_b.path()));
  CHECK(slurp(csv_a) == slurp(csv_b));
  CHECK(slurp(dir_a.file("instance_001.json")) == slurp(dir_b.file("instance_001.json")));
  CHECK(slurp(dir_a.file("result_000_compact.json")) == slurp(dir_b.file("result_000_compact.json")));
}

TEST_CASE("plots are emitted for each metric") {
  TempDir dir("plots");
  ExperimentConfig cfg = tiny_config(dir.path());
  cfg.samples = 1;
  const std::string csv = run_experiment(cfg);

  auto files = emit_plots(csv, dir.path());
  REQUIRE(files.size() == 3);
  for (const auto &file : files) {
    const std::string svg = slurp(file);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("compact") != std::string::npos);
    CHECK(svg.find("onehot") != std::string::npos);
    // Two series, each drawn as a polyline over the layer sweep.
    std::size_t polylines = 0;
    for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos;
         pos = svg.find("<polyline", pos + 1))
      ++polylines;
    CHECK(polylines == 2);
  }
}

TEST_CASE("single-point series fall back to markers") {
  TempDir dir("plots_single");
  std::vector<MetricsRow> rows;
  MetricsRow row;
  row.sample = 0;
  row.encoding = Encoding::Compact;
  row.layers = 1;
  row.metrics = {1.5, 0.25, 2};
  rows.push_back(row);
  save_metrics_csv(rows, dir.file("single.csv"));

  auto files = emit_plots(dir.file("single.csv"), dir.path());
  const std::string svg = slurp(files[0]);
  CHECK(svg.find("<polyline") == std::string::npos);
  CHECK(svg.find("<circle") != std::string::npos);
}

TEST_CASE("empty CSVs are rejected before any file is written") {
  TempDir dir("plots_empty");
  save_metrics_csv({}, dir.file("empty.csv"));
  CHECK_THROWS_AS(emit_plots(dir.file("empty.csv"), dir.path()), std::runtime_error);
  CHECK_FALSE(std::filesystem::exists(dir.file("approximation_ratio.svg")));
  CHECK_FALSE(std::filesystem::exists(dir.file("true_percentage.svg")));
  CHECK_FALSE(std::filesystem::exists(dir.file("rank.svg")));
}

TEST_CASE("a failing sample is skipped, not fatal") {
  TempDir dir("experiment_fail");
  ExperimentConfig cfg = tiny_config(dir.path());
  cfg.n = 21; // both exact solvers reject n > 20, so every sample fails
  const std::string csv = run_experiment(cfg);
  CHECK(load_metrics_csv(csv).empty());
}

TEST_CASE("experiment configs are validated") {
  ExperimentConfig cfg;
  cfg.out_dir = "";
  CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
  cfg.out_dir = "somewhere";
  cfg.samples = 0;
  CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
  cfg.samples = 1;
  cfg.encodings.clear();
  CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
}
