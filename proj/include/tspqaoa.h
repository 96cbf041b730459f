/*
 * Copyright 2026 The tspqaoa Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of the tspqaoa shared library.
 *
 * The library compiles symmetric Euclidean TSP instances into diagonal QAOA
 * problem Hamiltonians under two binary encodings - one-hot, (n-1)^2 qubits,
 * and compact, (n-1)*ceil(log2 n) qubits - simulates and trains QAOA on them,
 * and scores the output state against exact classical solvers.
 *
 * All functions returning tspq_status leave outputs untouched on failure and
 * record a human-readable message retrievable with tspq_last_error() (the
 * message is thread-local). Objects returned through out-parameters are owned
 * by the caller and released with the matching *_free function. Cities are
 * 0-indexed and every tour starts at city 0.
 */

#ifndef TSPQAOA_H
#define TSPQAOA_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tspq_status {
  TSPQ_OK = 0,
  TSPQ_ERR_INVALID_ARGUMENT = 1,
  TSPQ_ERR_IO = 2,
  TSPQ_ERR_NUMERIC = 3,
  TSPQ_ERR_INTERNAL = 4
} tspq_status;

typedef enum tspq_encoding {
  TSPQ_ENCODING_COMPACT = 0,
  TSPQ_ENCODING_ONEHOT = 1
} tspq_encoding;

typedef struct tspq_instance tspq_instance;
typedef struct tspq_solution tspq_solution;
typedef struct tspq_problem tspq_problem;
typedef struct tspq_train_result tspq_train_result;

const char *tspq_version(void);
/* Message for the most recent failing call on this thread; never NULL. */
const char *tspq_last_error(void);

/* ------------------------------------------------------------------ */
/* Instances                                                           */

/* Random instance on the plane_size x plane_size plane: quadrant midpoints
 * as means, normal per-coordinate noise with the given variance. */
tspq_status tspq_instance_generate(int n, uint64_t seed, double plane_size,
                                   double sigma_squared, tspq_instance **out);
tspq_status tspq_instance_load(const char *path, tspq_instance **out);
tspq_status tspq_instance_save(const tspq_instance *inst, const char *path);
void tspq_instance_free(tspq_instance *inst);

int tspq_instance_city_count(const tspq_instance *inst);
tspq_status tspq_instance_distance(const tspq_instance *inst, int u, int v, double *out);
tspq_status tspq_instance_coord(const tspq_instance *inst, int city, double *x, double *y);

/* ------------------------------------------------------------------ */
/* Exact solvers                                                       */

/* Brute-force enumeration of all (n-1)! directed tours; n <= 12. */
tspq_status tspq_solve_enumeration(const tspq_instance *inst, tspq_solution **out);
/* Held-Karp subset dynamic program; n <= 20. */
tspq_status tspq_solve_held_karp(const tspq_instance *inst, tspq_solution **out);
void tspq_solution_free(tspq_solution *sol);

double tspq_solution_length(const tspq_solution *sol);
/* Copies the optimal tour into buf (n entries); returns the city count or a
 * negative value if buf_len is too small. */
int tspq_solution_tour(const tspq_solution *sol, int *buf, int buf_len);
/* Number of directed tours achieving the optimal length. */
int tspq_solution_optimal_count(const tspq_solution *sol);

/* ------------------------------------------------------------------ */
/* Hamiltonian formulation                                             */

/* Builds the diagonal problem Hamiltonian with default weights: penalty
 * P = 2 n max(W) for compact, A = 2 n max(W), B = 1 for one-hot. */
tspq_status tspq_problem_build(const tspq_instance *inst, tspq_encoding encoding,
                               tspq_problem **out);
/* Same with explicit weights. */
tspq_status tspq_problem_build_compact(const tspq_instance *inst, double penalty,
                                       tspq_problem **out);
tspq_status tspq_problem_build_onehot(const tspq_instance *inst, double constraint_weight,
                                      double route_weight, tspq_problem **out);
void tspq_problem_free(tspq_problem *problem);

int tspq_problem_qubit_count(const tspq_problem *problem);
size_t tspq_problem_term_count(const tspq_problem *problem);
/* Energy of one computational basis state (bit q of `bits` = qubit q). */
tspq_status tspq_problem_energy(const tspq_problem *problem, uint64_t bits, double *out);

/* Text export: `index... coefficient` lines for the multilinear polynomial
 * and the Pauli-Z expansion respectively. */
tspq_status tspq_problem_save_polynomial(const tspq_problem *problem, const char *path);
tspq_status tspq_problem_save_pauli(const tspq_problem *problem, const char *path);

/* CNOT-ladder gate counts of the Pauli expansion. Any output pointer may be
 * NULL. */
tspq_status tspq_problem_gate_counts(const tspq_problem *problem, uint64_t *rotations,
                                     uint64_t *two_qubit_gates);
/* Same, for a polynomial text file written by tspq_problem_save_polynomial. */
tspq_status tspq_gate_counts_from_file(const char *poly_path, uint64_t *rotations,
                                       uint64_t *two_qubit_gates);

/* ------------------------------------------------------------------ */
/* Training and metrics                                                */

typedef struct tspq_opt_config {
  int hops;               /* basin-hopping iterations, default 500 */
  double step_size;       /* perturbation half-width in radians, default 0.3 */
  double temperature;     /* Metropolis temperature, default 1.0 */
  double local_tolerance; /* simplex diameter tolerance, default 1e-6 */
  int max_local_iters;    /* per local minimization, default 200 */
  uint64_t seed;
} tspq_opt_config;

void tspq_opt_config_init(tspq_opt_config *cfg);

/* Layerwise training: layer p is optimized with layers 1..p-1 frozen. */
tspq_status tspq_train(const tspq_problem *problem, int layers, const tspq_opt_config *cfg,
                       tspq_train_result **out);
void tspq_train_result_free(tspq_train_result *result);

int tspq_train_result_layers(const tspq_train_result *result);
tspq_encoding tspq_train_result_encoding(const tspq_train_result *result);
double tspq_train_result_best_value(const tspq_train_result *result);
/* Best expectation after training the first `layers` layers. */
tspq_status tspq_train_result_layer_value(const tspq_train_result *result, int layers,
                                          double *out);
/* Copies gamma/beta per layer; either buffer may be NULL. */
tspq_status tspq_train_result_schedule(const tspq_train_result *result, double *gammas,
                                       double *betas, int buf_len);
tspq_status tspq_train_result_save(const tspq_train_result *result, const char *path);
tspq_status tspq_train_result_load(const char *path, tspq_train_result **out);
/* Rebuilds the problem a stored result was trained on (same encoding and
 * weights) from its instance. */
tspq_status tspq_problem_for_result(const tspq_instance *inst, const tspq_train_result *result,
                                    tspq_problem **out);

typedef struct tspq_metrics {
  double approximation_ratio; /* <H_P> / optimal length */
  double true_percentage;     /* probability mass on optimal-tour bitstrings */
  uint64_t rank;              /* 1 + #states strictly more probable than the optimum */
} tspq_metrics;

/* Runs the first `layers` trained layers and scores the output state. */
tspq_status tspq_evaluate(const tspq_problem *problem, const tspq_train_result *result,
                          const tspq_solution *solution, int layers, tspq_metrics *out);

/* ------------------------------------------------------------------ */
/* Experiment orchestration                                            */

typedef struct tspq_experiment_config {
  int n;               /* cities, default 4 */
  int samples;         /* default 10 */
  int max_layers;      /* default 5 */
  int use_compact;     /* nonzero to include the compact encoding */
  int use_onehot;      /* nonzero to include the one-hot encoding */
  uint64_t base_seed;  /* sample i uses base_seed + i */
  double plane_size;   /* default 100 */
  double sigma_squared;/* default 10 */
  tspq_opt_config opt;
} tspq_experiment_config;

void tspq_experiment_config_init(tspq_experiment_config *cfg);

/* Generates, solves, builds, trains and scores every sample; persists
 * per-sample instance and result JSON plus metrics.csv under out_dir. The
 * CSV path is returned through csv_path (free with tspq_string_free). */
tspq_status tspq_run_experiment(const tspq_experiment_config *cfg, const char *out_dir,
                                char **csv_path);
/* Three SVG charts (approximation ratio, true percentage, rank vs layers)
 * from a metrics.csv. */
tspq_status tspq_emit_plots(const char *csv_path, const char *out_dir);

void tspq_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* TSPQAOA_H */
