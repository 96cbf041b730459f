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

// Command-line front end. Everything goes through the shared library's C
// interface; this translation unit includes no core headers.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tspqaoa.h"

namespace {

[[noreturn]] void fail(const std::string &context) {
  std::fprintf(stderr, "error: %s: %s\n", context.c_str(), tspq_last_error());
  std::exit(1);
}

void check(tspq_status status, const std::string &context) {
  if (status != TSPQ_OK)
    fail(context);
}

std::string default_out_dir() {
  const char *env = std::getenv("TSPQAOA_OUT");
  return env != nullptr && *env != '\0' ? env : ".";
}

// key=value (or `key value`) files; '#' starts a comment.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    std::fprintf(stderr, "error: cannot open config file %s\n", path.c_str());
    std::exit(1);
  }
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    std::string key, value;
    const auto eq = line.find('=');
    std::istringstream ls(line);
    if (eq != std::string::npos) {
      key = line.substr(0, eq);
      value = line.substr(eq + 1);
    } else if (!(ls >> key >> value)) {
      continue;
    }
    auto trim = [](std::string &s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    trim(key);
    trim(value);
    if (!key.empty())
      entries.emplace_back(key, value);
  }
  return entries;
}

struct TrainOptions {
  int layers = 5;
  tspq_opt_config opt;
  std::string encoding = "compact";
  double penalty = 0.0; // 0 = library default
  double constraint_weight = 0.0;
  double route_weight = 0.0;

  void apply_config_file(const std::string &path) {
    for (const auto &[key, value] : read_config_file(path)) {
      if (key == "layers")
        layers = std::stoi(value);
      else if (key == "hops")
        opt.hops = std::stoi(value);
      else if (key == "step_size")
        opt.step_size = std::stod(value);
      else if (key == "temperature")
        opt.temperature = std::stod(value);
      else if (key == "seed")
        opt.seed = std::stoull(value);
      else if (key == "encoding")
        encoding = value;
      else if (key == "penalty")
        penalty = std::stod(value);
      else {
        std::fprintf(stderr, "error: unknown config key '%s'\n", key.c_str());
        std::exit(1);
      }
    }
  }
};

using InstancePtr = std::unique_ptr<tspq_instance, decltype(&tspq_instance_free)>;
using SolutionPtr = std::unique_ptr<tspq_solution, decltype(&tspq_solution_free)>;
using ProblemPtr = std::unique_ptr<tspq_problem, decltype(&tspq_problem_free)>;
using ResultPtr = std::unique_ptr<tspq_train_result, decltype(&tspq_train_result_free)>;

InstancePtr load_instance_or_fail(const std::string &path) {
  tspq_instance *inst = nullptr;
  check(tspq_instance_load(path.c_str(), &inst), "loading " + path);
  return InstancePtr(inst, &tspq_instance_free);
}

ProblemPtr build_problem(const tspq_instance *inst, const TrainOptions &opts) {
  tspq_problem *problem = nullptr;
  if (opts.encoding == "compact") {
    if (opts.penalty > 0.0)
      check(tspq_problem_build_compact(inst, opts.penalty, &problem), "building Hamiltonian");
    else
      check(tspq_problem_build(inst, TSPQ_ENCODING_COMPACT, &problem), "building Hamiltonian");
  } else if (opts.encoding == "onehot" || opts.encoding == "one-hot") {
    if (opts.constraint_weight > 0.0 && opts.route_weight > 0.0) {
      check(tspq_problem_build_onehot(inst, opts.constraint_weight, opts.route_weight, &problem),
            "building Hamiltonian");
    } else if (opts.constraint_weight > 0.0 || opts.route_weight > 0.0) {
      std::fprintf(stderr,
                   "error: --constraint-weight and --route-weight must be given together\n");
      std::exit(1);
    } else {
      check(tspq_problem_build(inst, TSPQ_ENCODING_ONEHOT, &problem), "building Hamiltonian");
    }
  } else {
    std::fprintf(stderr, "error: unknown encoding '%s'\n", opts.encoding.c_str());
    std::exit(1);
  }
  return ProblemPtr(problem, &tspq_problem_free);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"TSP to QAOA compiler, simulator and benchmark harness"};
  app.require_subcommand(1);

  // gen
  auto *gen = app.add_subcommand("gen", "Generate a random TSP instance");
  int gen_n = 4;
  std::uint64_t gen_seed = 0;
  double gen_plane = 100.0, gen_sigma2 = 10.0;
  std::string gen_out;
  gen->add_option("--n", gen_n, "City count")->capture_default_str();
  gen->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
  gen->add_option("--plane", gen_plane, "Plane side length")->capture_default_str();
  gen->add_option("--sigma2", gen_sigma2, "Per-quadrant normal variance")->capture_default_str();
  gen->add_option("--out", gen_out, "Output instance file")->required();

  // solve-exact
  auto *solve = app.add_subcommand("solve-exact", "Solve an instance with an exact oracle");
  std::string solve_instance, solve_method = "auto";
  solve->add_option("--instance", solve_instance, "Instance file")->required();
  solve->add_option("--method", solve_method, "auto, enum or held-karp")->capture_default_str();

  // build
  auto *build = app.add_subcommand("build", "Compile an instance into a problem Hamiltonian");
  std::string build_instance, build_encoding = "compact", build_out, build_pauli_out;
  double build_penalty = 0.0, build_a = 0.0, build_b = 0.0;
  build->add_option("--instance", build_instance, "Instance file")->required();
  build->add_option("--encoding", build_encoding, "compact or onehot")->capture_default_str();
  build->add_option("--out", build_out, "Polynomial output file")->required();
  build->add_option("--pauli", build_pauli_out, "Also write the Pauli-Z expansion here");
  build->add_option("--penalty", build_penalty, "Compact penalty P (default 2 n max W)");
  build->add_option("--constraint-weight", build_a, "One-hot constraint weight A");
  build->add_option("--route-weight", build_b, "One-hot route weight B (default 1)");

  // gatecount
  auto *gatecount = app.add_subcommand("gatecount", "Gate counts for a polynomial file");
  std::string gate_in;
  gatecount->add_option("--in", gate_in, "Polynomial file")->required();

  // train
  auto *train = app.add_subcommand("train", "Layerwise-train QAOA parameters");
  std::string train_instance, train_out, train_config;
  TrainOptions train_opts;
  tspq_opt_config_init(&train_opts.opt);
  train->add_option("--instance", train_instance, "Instance file")->required();
  train->add_option("--encoding", train_opts.encoding, "compact or onehot")->capture_default_str();
  train->add_option("--layers", train_opts.layers, "QAOA layers")->capture_default_str();
  train->add_option("--hops", train_opts.opt.hops, "Basin-hopping iterations")->capture_default_str();
  train->add_option("--step", train_opts.opt.step_size, "Perturbation half-width")
      ->capture_default_str();
  train->add_option("--temperature", train_opts.opt.temperature, "Metropolis temperature")
      ->capture_default_str();
  train->add_option("--seed", train_opts.opt.seed, "Optimizer seed")->capture_default_str();
  train->add_option("--penalty", train_opts.penalty, "Compact penalty P");
  train->add_option("--constraint-weight", train_opts.constraint_weight, "One-hot weight A");
  train->add_option("--route-weight", train_opts.route_weight, "One-hot weight B");
  train->add_option("--config", train_config, "Key-value config file (flags win)");
  train->add_option("--out", train_out, "Result JSON output")->required();

  // metrics
  auto *metrics = app.add_subcommand("metrics", "Score a trained result against the exact optimum");
  std::string metrics_instance, metrics_result, metrics_out;
  int metrics_sample = 0;
  metrics->add_option("--instance", metrics_instance, "Instance file")->required();
  metrics->add_option("--result", metrics_result, "Result JSON from train")->required();
  metrics->add_option("--out", metrics_out, "Write CSV here instead of stdout");
  metrics->add_option("--sample", metrics_sample, "Sample id for the CSV column")
      ->capture_default_str();

  // experiment
  auto *experiment = app.add_subcommand("experiment", "Full benchmark sweep");
  tspq_experiment_config exp_cfg;
  tspq_experiment_config_init(&exp_cfg);
  std::string exp_out = default_out_dir(), exp_encodings = "compact,onehot", exp_config;
  experiment->add_option("--n", exp_cfg.n, "City count")->capture_default_str();
  experiment->add_option("--samples", exp_cfg.samples, "Sample count")->capture_default_str();
  experiment->add_option("--layers", exp_cfg.max_layers, "Layer sweep bound")->capture_default_str();
  experiment->add_option("--seed", exp_cfg.base_seed, "Base seed; sample i uses seed+i")
      ->capture_default_str();
  experiment->add_option("--hops", exp_cfg.opt.hops, "Basin-hopping iterations")
      ->capture_default_str();
  experiment->add_option("--opt-seed", exp_cfg.opt.seed, "Optimizer base seed")
      ->capture_default_str();
  experiment->add_option("--encodings", exp_encodings, "Comma-separated subset of compact,onehot")
      ->capture_default_str();
  experiment->add_option("--config", exp_config, "Key-value config file (flags win)");
  experiment->add_option("--out", exp_out, "Output directory (default $TSPQAOA_OUT or .)");

  // plot
  auto *plot = app.add_subcommand("plot", "Render SVG charts from a metrics CSV");
  std::string plot_csv, plot_out = default_out_dir();
  plot->add_option("--csv", plot_csv, "metrics.csv from experiment")->required();
  plot->add_option("--out", plot_out, "Output directory (default $TSPQAOA_OUT or .)");

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    tspq_instance *inst = nullptr;
    check(tspq_instance_generate(gen_n, gen_seed, gen_plane, gen_sigma2, &inst),
          "generating instance");
    InstancePtr holder(inst, &tspq_instance_free);
    check(tspq_instance_save(inst, gen_out.c_str()), "saving " + gen_out);
    std::printf("wrote %s (%d cities, seed %llu)\n", gen_out.c_str(), gen_n,
                static_cast<unsigned long long>(gen_seed));
    return 0;
  }

  if (solve->parsed()) {
    auto inst = load_instance_or_fail(solve_instance);
    const int n = tspq_instance_city_count(inst.get());
    tspq_solution *sol = nullptr;
    if (solve_method == "enum" || (solve_method == "auto" && n <= 9))
      check(tspq_solve_enumeration(inst.get(), &sol), "solving");
    else if (solve_method == "held-karp" || solve_method == "auto")
      check(tspq_solve_held_karp(inst.get(), &sol), "solving");
    else {
      std::fprintf(stderr, "error: unknown method '%s'\n", solve_method.c_str());
      return 1;
    }
    SolutionPtr holder(sol, &tspq_solution_free);
    std::vector<int> tour(static_cast<std::size_t>(n));
    tspq_solution_tour(sol, tour.data(), n);
    std::printf("length %.17g\n", tspq_solution_length(sol));
    std::printf("tour");
    for (int city : tour)
      std::printf(" %d", city);
    std::printf("\noptimal_tours %d\n", tspq_solution_optimal_count(sol));
    return 0;
  }

  if (build->parsed()) {
    auto inst = load_instance_or_fail(build_instance);
    TrainOptions opts;
    tspq_opt_config_init(&opts.opt);
    opts.encoding = build_encoding;
    opts.penalty = build_penalty;
    opts.constraint_weight = build_a;
    opts.route_weight = build_b;
    auto problem = build_problem(inst.get(), opts);
    check(tspq_problem_save_polynomial(problem.get(), build_out.c_str()), "writing " + build_out);
    if (!build_pauli_out.empty())
      check(tspq_problem_save_pauli(problem.get(), build_pauli_out.c_str()),
            "writing " + build_pauli_out);
    std::printf("wrote %s (%d qubits, %zu terms)\n", build_out.c_str(),
                tspq_problem_qubit_count(problem.get()), tspq_problem_term_count(problem.get()));
    return 0;
  }

  if (gatecount->parsed()) {
    std::uint64_t rotations = 0, two_qubit = 0;
    check(tspq_gate_counts_from_file(gate_in.c_str(), &rotations, &two_qubit), "reading " + gate_in);
    std::printf("rotations %llu\ntwo_qubit_gates %llu\n",
                static_cast<unsigned long long>(rotations),
                static_cast<unsigned long long>(two_qubit));
    return 0;
  }

  if (train->parsed()) {
    if (!train_config.empty()) {
      TrainOptions from_file = train_opts;
      from_file.apply_config_file(train_config);
      // Re-apply command-line values on top of the file.
      TrainOptions merged = from_file;
      if (train->count("--layers"))
        merged.layers = train_opts.layers;
      if (train->count("--hops"))
        merged.opt.hops = train_opts.opt.hops;
      if (train->count("--step"))
        merged.opt.step_size = train_opts.opt.step_size;
      if (train->count("--temperature"))
        merged.opt.temperature = train_opts.opt.temperature;
      if (train->count("--seed"))
        merged.opt.seed = train_opts.opt.seed;
      if (train->count("--encoding"))
        merged.encoding = train_opts.encoding;
      if (train->count("--penalty"))
        merged.penalty = train_opts.penalty;
      train_opts = merged;
    }
    auto inst = load_instance_or_fail(train_instance);
    auto problem = build_problem(inst.get(), train_opts);
    tspq_train_result *result = nullptr;
    check(tspq_train(problem.get(), train_opts.layers, &train_opts.opt, &result), "training");
    ResultPtr holder(result, &tspq_train_result_free);
    check(tspq_train_result_save(result, train_out.c_str()), "writing " + train_out);
    std::printf("wrote %s (best expectation %.17g)\n", train_out.c_str(),
                tspq_train_result_best_value(result));
    return 0;
  }

  if (metrics->parsed()) {
    auto inst = load_instance_or_fail(metrics_instance);
    tspq_train_result *result = nullptr;
    check(tspq_train_result_load(metrics_result.c_str(), &result), "loading " + metrics_result);
    ResultPtr result_holder(result, &tspq_train_result_free);
    tspq_problem *problem = nullptr;
    check(tspq_problem_for_result(inst.get(), result, &problem), "rebuilding Hamiltonian");
    ProblemPtr problem_holder(problem, &tspq_problem_free);
    tspq_solution *sol = nullptr;
    if (tspq_instance_city_count(inst.get()) <= 9)
      check(tspq_solve_enumeration(inst.get(), &sol), "solving");
    else
      check(tspq_solve_held_karp(inst.get(), &sol), "solving");
    SolutionPtr sol_holder(sol, &tspq_solution_free);

    std::FILE *out = stdout;
    if (!metrics_out.empty()) {
      out = std::fopen(metrics_out.c_str(), "w");
      if (out == nullptr) {
        std::fprintf(stderr, "error: cannot open %s\n", metrics_out.c_str());
        return 1;
      }
    }
    const char *enc_name =
        tspq_train_result_encoding(result) == TSPQ_ENCODING_ONEHOT ? "onehot" : "compact";
    std::fprintf(out, "sample,encoding,layers,ar,true_pct,rank\n");
    const int layers = tspq_train_result_layers(result);
    for (int p = 1; p <= layers; ++p) {
      tspq_metrics m;
      check(tspq_evaluate(problem, result, sol, p, &m), "evaluating");
      std::fprintf(out, "%d,%s,%d,%.17g,%.17g,%llu\n", metrics_sample, enc_name, p,
                   m.approximation_ratio, m.true_percentage,
                   static_cast<unsigned long long>(m.rank));
    }
    if (out != stdout)
      std::fclose(out);
    return 0;
  }

  if (experiment->parsed()) {
    if (!exp_config.empty()) {
      for (const auto &[key, value] : read_config_file(exp_config)) {
        if (key == "n" && !experiment->count("--n"))
          exp_cfg.n = std::stoi(value);
        else if (key == "samples" && !experiment->count("--samples"))
          exp_cfg.samples = std::stoi(value);
        else if (key == "layers" && !experiment->count("--layers"))
          exp_cfg.max_layers = std::stoi(value);
        else if (key == "seed" && !experiment->count("--seed"))
          exp_cfg.base_seed = std::stoull(value);
        else if (key == "hops" && !experiment->count("--hops"))
          exp_cfg.opt.hops = std::stoi(value);
        else if (key == "step_size")
          exp_cfg.opt.step_size = std::stod(value);
        else if (key == "temperature")
          exp_cfg.opt.temperature = std::stod(value);
        else if (key == "encodings" && !experiment->count("--encodings"))
          exp_encodings = value;
        else if (key == "out" && !experiment->count("--out"))
          exp_out = value;
      }
    }
    exp_cfg.use_compact = exp_encodings.find("compact") != std::string::npos ? 1 : 0;
    exp_cfg.use_onehot = exp_encodings.find("onehot") != std::string::npos ||
                                 exp_encodings.find("one-hot") != std::string::npos
                             ? 1
                             : 0;
    char *csv = nullptr;
    check(tspq_run_experiment(&exp_cfg, exp_out.c_str(), &csv), "running experiment");
    std::printf("wrote %s\n", csv);
    tspq_string_free(csv);
    return 0;
  }

  if (plot->parsed()) {
    check(tspq_emit_plots(plot_csv.c_str(), plot_out.c_str()), "plotting " + plot_csv);
    std::printf("wrote approximation_ratio.svg, true_percentage.svg, rank.svg under %s\n",
                plot_out.c_str());
    return 0;
  }

  return 0;
}
