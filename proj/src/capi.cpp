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

#include "tspqaoa.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "core/dyadic.hpp"
#include "core/encoding.hpp"
#include "core/exact_tsp.hpp"
#include "core/experiment.hpp"
#include "core/formulation.hpp"
#include "core/instance.hpp"
#include "core/metrics.hpp"
#include "core/optimizer.hpp"
#include "core/pauli.hpp"
#include "core/polynomial.hpp"
#include "core/simulator.hpp"

using namespace tspqaoa;

struct tspq_instance {
  TspInstance inst;
};

struct tspq_solution {
  OptimalSolution sol;
};

struct tspq_problem {
  Encoding encoding;
  EncodingScheme scheme;
  OneHotConfig onehot_weights{0.0, 0.0};
  CompactConfig compact_weights{0.0};
  BinaryPolynomial poly;
  EnergyTable table;
};

struct tspq_train_result {
  TrainRunRecord record;
};

namespace {

thread_local std::string g_last_error = "no error";

void set_error(const std::string &msg) { g_last_error = msg; }

// Runs the body and maps exceptions onto status codes.
template <typename Fn> tspq_status guarded(Fn &&fn) {
  try {
    return fn();
  } catch (const dyadic_range_error &e) {
    set_error(e.what());
    return TSPQ_ERR_NUMERIC;
  } catch (const std::invalid_argument &e) {
    set_error(e.what());
    return TSPQ_ERR_INVALID_ARGUMENT;
  } catch (const std::runtime_error &e) {
    set_error(e.what());
    return TSPQ_ERR_IO;
  } catch (const std::bad_alloc &) {
    set_error("out of memory");
    return TSPQ_ERR_INTERNAL;
  } catch (const std::exception &e) {
    set_error(e.what());
    return TSPQ_ERR_INTERNAL;
  }
}

tspq_status require(bool ok, const char *msg) {
  if (!ok) {
    set_error(msg);
    return TSPQ_ERR_INVALID_ARGUMENT;
  }
  return TSPQ_OK;
}

Encoding to_encoding(tspq_encoding e) {
  return e == TSPQ_ENCODING_COMPACT ? Encoding::Compact : Encoding::OneHot;
}

EncodingScheme scheme_for(Encoding e, int n) {
  return e == Encoding::Compact ? EncodingScheme::compact(n) : EncodingScheme::onehot(n);
}

OptConfig to_opt_config(const tspq_opt_config *cfg) {
  if (cfg == nullptr) {
    return OptConfig{};
  }
  OptConfig out;
  out.hops = cfg->hops;
  out.step_size = cfg->step_size;
  out.temperature = cfg->temperature;
  out.local_tolerance = cfg->local_tolerance;
  out.max_local_iters = cfg->max_local_iters;
  out.seed = cfg->seed;
  return out;
}

tspq_problem *make_problem(const TspInstance &inst, Encoding enc, OneHotConfig onehot,
                           CompactConfig compact) {
  BinaryPolynomial poly = enc == Encoding::Compact ? build_compact_energy(inst, compact)
                                                   : build_onehot_energy(inst, onehot);
  EnergyTable table = energy_table(poly);
  return new tspq_problem{enc, scheme_for(enc, inst.city_count()), onehot, compact,
                          std::move(poly), std::move(table)};
}

Statevector run_layers(const tspq_problem &problem, const TrainResult &result, int layers) {
  if (layers < 1 || layers > static_cast<int>(result.schedule.size()))
    throw std::invalid_argument("layer count outside the trained schedule");
  QaoaSchedule prefix(result.schedule.begin(), result.schedule.begin() + layers);
  return run_qaoa(problem.table, prefix);
}

} // namespace

extern "C" {

const char *tspq_version(void) { return "0.1.0"; }

const char *tspq_last_error(void) { return g_last_error.c_str(); }

tspq_status tspq_instance_generate(int n, uint64_t seed, double plane_size, double sigma_squared,
                                   tspq_instance **out) {
  if (auto st = require(out != nullptr, "tspq_instance_generate: out is NULL"))
    return st;
  return guarded([&] {
    GenConfig cfg;
    cfg.plane_size = plane_size;
    cfg.sigma_squared = sigma_squared;
    cfg.seed = seed;
    *out = new tspq_instance{generate_instance(n, cfg)};
    return TSPQ_OK;
  });
}

tspq_status tspq_instance_load(const char *path, tspq_instance **out) {
  if (auto st = require(path != nullptr && out != nullptr, "tspq_instance_load: NULL argument"))
    return st;
  return guarded([&] {
    *out = new tspq_instance{load_instance(path)};
    return TSPQ_OK;
  });
}

tspq_status tspq_instance_save(const tspq_instance *inst, const char *path) {
  if (auto st = require(inst != nullptr && path != nullptr, "tspq_instance_save: NULL argument"))
    return st;
  return guarded([&] {
    save_instance(inst->inst, path);
    return TSPQ_OK;
  });
}

void tspq_instance_free(tspq_instance *inst) { delete inst; }

int tspq_instance_city_count(const tspq_instance *inst) {
  return inst == nullptr ? 0 : inst->inst.city_count();
}

tspq_status tspq_instance_distance(const tspq_instance *inst, int u, int v, double *out) {
  if (auto st = require(inst != nullptr && out != nullptr, "tspq_instance_distance: NULL argument"))
    return st;
  const int n = inst->inst.city_count();
  if (auto st = require(u >= 0 && u < n && v >= 0 && v < n,
                        "tspq_instance_distance: city index out of range"))
    return st;
  *out = inst->inst.distance(u, v);
  return TSPQ_OK;
}

tspq_status tspq_instance_coord(const tspq_instance *inst, int city, double *x, double *y) {
  if (auto st = require(inst != nullptr, "tspq_instance_coord: NULL instance"))
    return st;
  if (auto st = require(city >= 0 && city < inst->inst.city_count(),
                        "tspq_instance_coord: city index out of range"))
    return st;
  if (x != nullptr)
    *x = inst->inst.coords()[static_cast<std::size_t>(city)][0];
  if (y != nullptr)
    *y = inst->inst.coords()[static_cast<std::size_t>(city)][1];
  return TSPQ_OK;
}

tspq_status tspq_solve_enumeration(const tspq_instance *inst, tspq_solution **out) {
  if (auto st = require(inst != nullptr && out != nullptr, "tspq_solve_enumeration: NULL argument"))
    return st;
  return guarded([&] {
    *out = new tspq_solution{solve_exact_enumeration(inst->inst)};
    return TSPQ_OK;
  });
}

tspq_status tspq_solve_held_karp(const tspq_instance *inst, tspq_solution **out) {
  if (auto st = require(inst != nullptr && out != nullptr, "tspq_solve_held_karp: NULL argument"))
    return st;
  return guarded([&] {
    *out = new tspq_solution{solve_exact_held_karp(inst->inst)};
    return TSPQ_OK;
  });
}

void tspq_solution_free(tspq_solution *sol) { delete sol; }

double tspq_solution_length(const tspq_solution *sol) {
  return sol == nullptr ? 0.0 : sol->sol.length;
}

int tspq_solution_tour(const tspq_solution *sol, int *buf, int buf_len) {
  if (sol == nullptr || buf == nullptr)
    return -1;
  const int n = static_cast<int>(sol->sol.tour.size());
  if (buf_len < n)
    return -n;
  std::memcpy(buf, sol->sol.tour.data(), sizeof(int) * static_cast<std::size_t>(n));
  return n;
}

int tspq_solution_optimal_count(const tspq_solution *sol) {
  return sol == nullptr ? 0 : static_cast<int>(sol->sol.all_optimal_tours.size());
}

tspq_status tspq_problem_build(const tspq_instance *inst, tspq_encoding encoding,
                               tspq_problem **out) {
  if (auto st = require(inst != nullptr && out != nullptr, "tspq_problem_build: NULL argument"))
    return st;
  return guarded([&] {
    const Encoding enc = to_encoding(encoding);
    *out = make_problem(inst->inst, enc, default_onehot_config(inst->inst),
                        default_compact_config(inst->inst));
    return TSPQ_OK;
  });
}

tspq_status tspq_problem_build_compact(const tspq_instance *inst, double penalty,
                                       tspq_problem **out) {
  if (auto st =
          require(inst != nullptr && out != nullptr, "tspq_problem_build_compact: NULL argument"))
    return st;
  return guarded([&] {
    *out = make_problem(inst->inst, Encoding::Compact, default_onehot_config(inst->inst),
                        CompactConfig{penalty});
    return TSPQ_OK;
  });
}

tspq_status tspq_problem_build_onehot(const tspq_instance *inst, double constraint_weight,
                                      double route_weight, tspq_problem **out) {
  if (auto st =
          require(inst != nullptr && out != nullptr, "tspq_problem_build_onehot: NULL argument"))
    return st;
  return guarded([&] {
    *out = make_problem(inst->inst, Encoding::OneHot,
                        OneHotConfig{constraint_weight, route_weight},
                        default_compact_config(inst->inst));
    return TSPQ_OK;
  });
}

void tspq_problem_free(tspq_problem *problem) { delete problem; }

int tspq_problem_qubit_count(const tspq_problem *problem) {
  return problem == nullptr ? 0 : problem->scheme.qubit_count();
}

size_t tspq_problem_term_count(const tspq_problem *problem) {
  return problem == nullptr ? 0 : problem->poly.term_count();
}

tspq_status tspq_problem_energy(const tspq_problem *problem, uint64_t bits, double *out) {
  if (auto st = require(problem != nullptr && out != nullptr, "tspq_problem_energy: NULL argument"))
    return st;
  if (auto st = require(bits < problem->table.energies.size(),
                        "tspq_problem_energy: basis state out of range"))
    return st;
  *out = problem->table.energies[bits];
  return TSPQ_OK;
}

tspq_status tspq_problem_save_polynomial(const tspq_problem *problem, const char *path) {
  if (auto st = require(problem != nullptr && path != nullptr,
                        "tspq_problem_save_polynomial: NULL argument"))
    return st;
  return guarded([&] {
    save_polynomial(problem->poly, path);
    return TSPQ_OK;
  });
}

tspq_status tspq_problem_save_pauli(const tspq_problem *problem, const char *path) {
  if (auto st =
          require(problem != nullptr && path != nullptr, "tspq_problem_save_pauli: NULL argument"))
    return st;
  return guarded([&] {
    save_pauli(pauli_expand(problem->poly), path);
    return TSPQ_OK;
  });
}

tspq_status tspq_problem_gate_counts(const tspq_problem *problem, uint64_t *rotations,
                                     uint64_t *two_qubit_gates) {
  if (auto st = require(problem != nullptr, "tspq_problem_gate_counts: NULL problem"))
    return st;
  return guarded([&] {
    GateCounts counts = gate_count(pauli_expand(problem->poly));
    if (rotations != nullptr)
      *rotations = counts.rotations;
    if (two_qubit_gates != nullptr)
      *two_qubit_gates = counts.two_qubit_gates;
    return TSPQ_OK;
  });
}

tspq_status tspq_gate_counts_from_file(const char *poly_path, uint64_t *rotations,
                                       uint64_t *two_qubit_gates) {
  if (auto st = require(poly_path != nullptr, "tspq_gate_counts_from_file: NULL path"))
    return st;
  return guarded([&] {
    GateCounts counts = gate_count(pauli_expand(load_polynomial(poly_path)));
    if (rotations != nullptr)
      *rotations = counts.rotations;
    if (two_qubit_gates != nullptr)
      *two_qubit_gates = counts.two_qubit_gates;
    return TSPQ_OK;
  });
}

void tspq_opt_config_init(tspq_opt_config *cfg) {
  if (cfg == nullptr)
    return;
  OptConfig defaults;
  cfg->hops = defaults.hops;
  cfg->step_size = defaults.step_size;
  cfg->temperature = defaults.temperature;
  cfg->local_tolerance = defaults.local_tolerance;
  cfg->max_local_iters = defaults.max_local_iters;
  cfg->seed = defaults.seed;
}

tspq_status tspq_train(const tspq_problem *problem, int layers, const tspq_opt_config *cfg,
                       tspq_train_result **out) {
  if (auto st = require(problem != nullptr && out != nullptr, "tspq_train: NULL argument"))
    return st;
  return guarded([&] {
    TrainRunRecord record;
    record.encoding = problem->encoding;
    record.n = problem->scheme.n;
    record.onehot_weights = problem->onehot_weights;
    record.compact_weights = problem->compact_weights;
    record.opt = to_opt_config(cfg);
    record.result = layerwise_train(problem->table, layers, record.opt);
    *out = new tspq_train_result{std::move(record)};
    return TSPQ_OK;
  });
}

void tspq_train_result_free(tspq_train_result *result) { delete result; }

int tspq_train_result_layers(const tspq_train_result *result) {
  return result == nullptr ? 0 : static_cast<int>(result->record.result.schedule.size());
}

tspq_encoding tspq_train_result_encoding(const tspq_train_result *result) {
  return result != nullptr && result->record.encoding == Encoding::OneHot ? TSPQ_ENCODING_ONEHOT
                                                                          : TSPQ_ENCODING_COMPACT;
}

double tspq_train_result_best_value(const tspq_train_result *result) {
  return result == nullptr ? 0.0 : result->record.result.best_value;
}

tspq_status tspq_train_result_layer_value(const tspq_train_result *result, int layers,
                                          double *out) {
  if (auto st =
          require(result != nullptr && out != nullptr, "tspq_train_result_layer_value: NULL argument"))
    return st;
  const auto &history = result->record.result.per_layer_history;
  if (auto st = require(layers >= 1 && layers <= static_cast<int>(history.size()),
                        "tspq_train_result_layer_value: layer count out of range"))
    return st;
  *out = history[static_cast<std::size_t>(layers - 1)].second;
  return TSPQ_OK;
}

tspq_status tspq_train_result_schedule(const tspq_train_result *result, double *gammas,
                                       double *betas, int buf_len) {
  if (auto st = require(result != nullptr, "tspq_train_result_schedule: NULL result"))
    return st;
  const auto &schedule = result->record.result.schedule;
  if (auto st = require(buf_len >= static_cast<int>(schedule.size()),
                        "tspq_train_result_schedule: buffer too small"))
    return st;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (gammas != nullptr)
      gammas[i] = schedule[i].gamma;
    if (betas != nullptr)
      betas[i] = schedule[i].beta;
  }
  return TSPQ_OK;
}

tspq_status tspq_train_result_save(const tspq_train_result *result, const char *path) {
  if (auto st =
          require(result != nullptr && path != nullptr, "tspq_train_result_save: NULL argument"))
    return st;
  return guarded([&] {
    save_train_result(result->record, path);
    return TSPQ_OK;
  });
}

tspq_status tspq_train_result_load(const char *path, tspq_train_result **out) {
  if (auto st = require(path != nullptr && out != nullptr, "tspq_train_result_load: NULL argument"))
    return st;
  return guarded([&] {
    *out = new tspq_train_result{load_train_result(path)};
    return TSPQ_OK;
  });
}

tspq_status tspq_problem_for_result(const tspq_instance *inst, const tspq_train_result *result,
                                    tspq_problem **out) {
  if (auto st = require(inst != nullptr && result != nullptr && out != nullptr,
                        "tspq_problem_for_result: NULL argument"))
    return st;
  if (auto st = require(inst->inst.city_count() == result->record.n,
                        "tspq_problem_for_result: instance city count differs from the result"))
    return st;
  return guarded([&] {
    *out = make_problem(inst->inst, result->record.encoding, result->record.onehot_weights,
                        result->record.compact_weights);
    return TSPQ_OK;
  });
}

tspq_status tspq_evaluate(const tspq_problem *problem, const tspq_train_result *result,
                          const tspq_solution *solution, int layers, tspq_metrics *out) {
  if (auto st = require(problem != nullptr && result != nullptr && solution != nullptr &&
                            out != nullptr,
                        "tspq_evaluate: NULL argument"))
    return st;
  return guarded([&] {
    Statevector state = run_layers(*problem, result->record.result, layers);
    RunMetrics metrics = compute_metrics(state, problem->table, problem->scheme, solution->sol);
    out->approximation_ratio = metrics.approximation_ratio;
    out->true_percentage = metrics.true_percentage;
    out->rank = metrics.rank;
    return TSPQ_OK;
  });
}

void tspq_experiment_config_init(tspq_experiment_config *cfg) {
  if (cfg == nullptr)
    return;
  cfg->n = 4;
  cfg->samples = 10;
  cfg->max_layers = 5;
  cfg->use_compact = 1;
  cfg->use_onehot = 1;
  cfg->base_seed = 0;
  cfg->plane_size = 100.0;
  cfg->sigma_squared = 10.0;
  tspq_opt_config_init(&cfg->opt);
}

tspq_status tspq_run_experiment(const tspq_experiment_config *cfg, const char *out_dir,
                                char **csv_path) {
  if (auto st = require(cfg != nullptr && out_dir != nullptr, "tspq_run_experiment: NULL argument"))
    return st;
  return guarded([&] {
    ExperimentConfig ec;
    ec.n = cfg->n;
    ec.samples = cfg->samples;
    ec.max_layers = cfg->max_layers;
    ec.encodings.clear();
    if (cfg->use_compact)
      ec.encodings.push_back(Encoding::Compact);
    if (cfg->use_onehot)
      ec.encodings.push_back(Encoding::OneHot);
    ec.gen.plane_size = cfg->plane_size;
    ec.gen.sigma_squared = cfg->sigma_squared;
    ec.gen.seed = cfg->base_seed;
    ec.opt = to_opt_config(&cfg->opt);
    ec.out_dir = out_dir;
    std::string csv = run_experiment(ec);
    if (csv_path != nullptr) {
      *csv_path = static_cast<char *>(std::malloc(csv.size() + 1));
      if (*csv_path == nullptr)
        throw std::bad_alloc();
      std::memcpy(*csv_path, csv.c_str(), csv.size() + 1);
    }
    return TSPQ_OK;
  });
}

tspq_status tspq_emit_plots(const char *csv_path, const char *out_dir) {
  if (auto st =
          require(csv_path != nullptr && out_dir != nullptr, "tspq_emit_plots: NULL argument"))
    return st;
  return guarded([&] {
    emit_plots(csv_path, out_dir);
    return TSPQ_OK;
  });
}

void tspq_string_free(char *s) { std::free(s); }

} // extern "C"
