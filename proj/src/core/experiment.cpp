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

#include "core/experiment.hpp"

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "core/svg.hpp"

namespace tspqaoa {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace

void save_train_result(const TrainRunRecord &record, const std::string &path) {
  nlohmann::ordered_json j;
  j["encoding"] = encoding_name(record.encoding);
  j["n"] = record.n;
  if (record.encoding == Encoding::OneHot)
    j["weights"] = {{"constraint_weight", record.onehot_weights.constraint_weight},
                    {"route_weight", record.onehot_weights.route_weight}};
  else
    j["weights"] = {{"penalty", record.compact_weights.penalty}};
  j["opt"] = {{"hops", record.opt.hops},
              {"step_size", record.opt.step_size},
              {"temperature", record.opt.temperature},
              {"local_tolerance", record.opt.local_tolerance},
              {"max_local_iters", record.opt.max_local_iters},
              {"seed", record.opt.seed}};
  j["layers"] = static_cast<int>(record.result.schedule.size());
  auto schedule = nlohmann::ordered_json::array();
  for (const auto &layer : record.result.schedule)
    schedule.push_back({layer.gamma, layer.beta});
  j["schedule"] = std::move(schedule);
  j["best_value"] = record.result.best_value;
  auto history = nlohmann::ordered_json::array();
  for (const auto &[layer, value] : record.result.per_layer_history)
    history.push_back({layer, value});
  j["history"] = std::move(history);

  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("save_train_result: cannot open " + path);
  out << j.dump(2) << '\n';
  if (!out)
    throw std::runtime_error("save_train_result: write failed for " + path);
}

TrainRunRecord load_train_result(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("load_train_result: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception &e) {
    throw std::runtime_error("load_train_result: invalid JSON in " + path + ": " + e.what());
  }

  TrainRunRecord record;
  try {
    record.encoding = parse_encoding(j.at("encoding").get<std::string>());
    record.n = j.at("n").get<int>();
    const auto &w = j.at("weights");
    if (record.encoding == Encoding::OneHot)
      record.onehot_weights = {w.at("constraint_weight").get<double>(),
                               w.at("route_weight").get<double>()};
    else
      record.compact_weights = {w.at("penalty").get<double>()};
    const auto &o = j.at("opt");
    record.opt.hops = o.at("hops").get<int>();
    record.opt.step_size = o.at("step_size").get<double>();
    record.opt.temperature = o.at("temperature").get<double>();
    record.opt.local_tolerance = o.at("local_tolerance").get<double>();
    record.opt.max_local_iters = o.at("max_local_iters").get<int>();
    record.opt.seed = o.at("seed").get<std::uint64_t>();
    for (const auto &layer : j.at("schedule"))
      record.result.schedule.push_back({layer.at(0).get<double>(), layer.at(1).get<double>()});
    record.result.best_value = j.at("best_value").get<double>();
    for (const auto &h : j.at("history"))
      record.result.per_layer_history.emplace_back(h.at(0).get<int>(), h.at(1).get<double>());
  } catch (const nlohmann::json::exception &e) {
    throw std::runtime_error("load_train_result: missing or malformed field in " + path + ": " +
                             e.what());
  }
  return record;
}

void save_metrics_csv(const std::vector<MetricsRow> &rows, const std::string &path) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("save_metrics_csv: cannot open " + path);
  out << "sample,encoding,layers,ar,true_pct,rank\n";
  for (const auto &row : rows) {
    out << row.sample << ',' << encoding_name(row.encoding) << ',' << row.layers << ','
        << format_double(row.metrics.approximation_ratio) << ','
        << format_double(row.metrics.true_percentage) << ',' << row.metrics.rank << '\n';
  }
  if (!out)
    throw std::runtime_error("save_metrics_csv: write failed for " + path);
}

std::vector<MetricsRow> load_metrics_csv(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("load_metrics_csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line != "sample,encoding,layers,ar,true_pct,rank")
    throw std::runtime_error("load_metrics_csv: missing header in " + path);

  std::vector<MetricsRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty())
      continue;
    std::istringstream ls(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ls, field, ','))
      fields.push_back(field);
    if (fields.size() != 6)
      throw std::runtime_error("load_metrics_csv: expected 6 fields on line " +
                               std::to_string(line_no));
    MetricsRow row;
    try {
      row.sample = std::stoi(fields[0]);
      row.encoding = parse_encoding(fields[1]);
      row.layers = std::stoi(fields[2]);
      row.metrics.approximation_ratio = std::stod(fields[3]);
      row.metrics.true_percentage = std::stod(fields[4]);
      row.metrics.rank = std::stoull(fields[5]);
    } catch (const std::exception &e) {
      throw std::runtime_error("load_metrics_csv: malformed row on line " + std::to_string(line_no) +
                               ": " + e.what());
    }
    rows.push_back(row);
  }
  return rows;
}

std::string run_experiment(const ExperimentConfig &cfg) {
  if (cfg.samples < 1 || cfg.max_layers < 1)
    throw std::invalid_argument("run_experiment: samples and max_layers must be at least 1");
  if (cfg.encodings.empty())
    throw std::invalid_argument("run_experiment: no encodings selected");
  if (cfg.out_dir.empty())
    throw std::invalid_argument("run_experiment: output directory not set");

  std::filesystem::create_directories(cfg.out_dir);
  const std::filesystem::path dir(cfg.out_dir);

  std::vector<MetricsRow> rows;
  for (int sample = 0; sample < cfg.samples; ++sample) {
    std::vector<MetricsRow> sample_rows;
    try {
      GenConfig gen = cfg.gen;
      gen.seed = cfg.gen.seed + static_cast<std::uint64_t>(sample);
      TspInstance inst = generate_instance(cfg.n, gen);

      char name[64];
      std::snprintf(name, sizeof name, "instance_%03d.json", sample);
      save_instance(inst, (dir / name).string());

      OptimalSolution solution =
          cfg.n <= 9 ? solve_exact_enumeration(inst) : solve_exact_held_karp(inst);

      for (std::size_t e = 0; e < cfg.encodings.size(); ++e) {
        const Encoding enc = cfg.encodings[e];
        const EncodingScheme scheme =
            enc == Encoding::Compact ? EncodingScheme::compact(cfg.n) : EncodingScheme::onehot(cfg.n);

        TrainRunRecord record;
        record.encoding = enc;
        record.n = cfg.n;
        BinaryPolynomial poly = [&] {
          if (enc == Encoding::Compact) {
            record.compact_weights = default_compact_config(inst);
            return build_compact_energy(inst, record.compact_weights);
          }
          record.onehot_weights = default_onehot_config(inst);
          return build_onehot_energy(inst, record.onehot_weights);
        }();
        EnergyTable table = energy_table(poly);

        record.opt = cfg.opt;
        record.opt.seed = cfg.opt.seed + 2 * static_cast<std::uint64_t>(sample) + e;
        record.result = layerwise_train(table, cfg.max_layers, record.opt);

        std::snprintf(name, sizeof name, "result_%03d_%s.json", sample, encoding_name(enc).c_str());
        save_train_result(record, (dir / name).string());

        // Score the trained schedule at every layer count by extending the
        // circuit one layer at a time.
        auto bits = optimal_bitstrings(scheme, solution.all_optimal_tours);
        Statevector state = uniform_state(table.num_qubits);
        for (int p = 0; p < cfg.max_layers; ++p) {
          apply_phase(state, table, record.result.schedule[static_cast<std::size_t>(p)].gamma);
          apply_mixer(state, record.result.schedule[static_cast<std::size_t>(p)].beta);
          MetricsRow row;
          row.sample = sample;
          row.encoding = enc;
          row.layers = p + 1;
          row.metrics.approximation_ratio = approximation_ratio(state, table, solution.length);
          row.metrics.true_percentage = true_percentage(state, bits);
          row.metrics.rank = rank(state, bits);
          sample_rows.push_back(row);
        }
      }
      rows.insert(rows.end(), sample_rows.begin(), sample_rows.end());
    } catch (const std::exception &e) {
      std::cerr << "sample " << sample << " failed: " << e.what() << "\n";
    }
  }

  const std::string csv_path = (dir / "metrics.csv").string();
  save_metrics_csv(rows, csv_path);
  return csv_path;
}

std::vector<std::string> emit_plots(const std::string &csv_path, const std::string &out_dir) {
  auto rows = load_metrics_csv(csv_path);
  if (rows.empty())
    throw std::runtime_error("emit_plots: no data rows in " + csv_path);

  std::filesystem::create_directories(out_dir);
  const std::filesystem::path dir(out_dir);

  // Mean per (encoding, layer), series ordered compact first.
  struct Acc {
    double ar = 0.0, tp = 0.0, rk = 0.0;
    int count = 0;
  };
  std::map<std::pair<int, int>, Acc> acc; // (encoding index, layers)
  for (const auto &row : rows) {
    auto &a = acc[{row.encoding == Encoding::Compact ? 0 : 1, row.layers}];
    a.ar += row.metrics.approximation_ratio;
    a.tp += row.metrics.true_percentage;
    a.rk += static_cast<double>(row.metrics.rank);
    a.count += 1;
  }

  auto series_for = [&](auto pick) {
    std::vector<ChartSeries> series;
    for (int e = 0; e < 2; ++e) {
      ChartSeries s;
      s.label = e == 0 ? "compact" : "onehot";
      for (const auto &[key, a] : acc)
        if (key.first == e)
          s.points.emplace_back(key.second, pick(a) / a.count);
      if (!s.points.empty())
        series.push_back(std::move(s));
    }
    return series;
  };

  const std::string ar_path = (dir / "approximation_ratio.svg").string();
  const std::string tp_path = (dir / "true_percentage.svg").string();
  const std::string rank_path = (dir / "rank.svg").string();
  write_line_chart(ar_path, "Approximation ratio vs layers", "layers", "approximation ratio",
                   series_for([](const Acc &a) { return a.ar; }));
  write_line_chart(tp_path, "True percentage vs layers", "layers", "true percentage",
                   series_for([](const Acc &a) { return a.tp; }));
  write_line_chart(rank_path, "Rank vs layers", "layers", "rank",
                   series_for([](const Acc &a) { return a.rk; }));
  return {ar_path, tp_path, rank_path};
}

} // namespace tspqaoa
