// SPDX-License-Identifier: Apache-2.0
//
// torus-beam: phase-only passive beamforming for RIS-assisted MISO links
// Copyright (C) 2026 The torus-beam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

/*
 * C interface of torus-beam.
 *
 * All objects are opaque handles created by tb_*_create/compute/solve/run
 * and released with the matching tb_*_free (which accept NULL). Functions
 * that can fail return a tb_status; on failure tb_last_error() describes the
 * problem. The error text is thread-local and stays valid until the next
 * failing call on the same thread.
 *
 * Complex matrices cross the boundary as interleaved (re, im) doubles in
 * column-major order, i.e. 2 * rows * cols values.
 */
#ifndef TORUS_BEAM_H
#define TORUS_BEAM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TORUS_BEAM_BUILDING_LIBRARY)
#    define TORUS_BEAM_API __declspec(dllexport)
#  else
#    define TORUS_BEAM_API __declspec(dllimport)
#  endif
#else
#  define TORUS_BEAM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tb_status {
  TB_OK = 0,
  TB_ERR_INVALID_ARGUMENT = 1,
  TB_ERR_NOT_HERMITIAN = 2,
  TB_ERR_BUDGET = 3, /* brute-force grid too large */
  TB_ERR_NUMERIC = 4,
  TB_ERR_IO = 5,
  TB_ERR_INTERNAL = 6
} tb_status;

typedef enum tb_solver { TB_SOLVER_RA = 0, TB_SOLVER_MO = 1, TB_SOLVER_BRUTE = 2 } tb_solver;

typedef enum tb_mo_init {
  TB_MO_INIT_RA_WARM = 0,
  TB_MO_INIT_RANDOM = 1,
  TB_MO_INIT_ONES = 2
} tb_mo_init;

typedef struct tb_problem tb_problem;       /* quadratic form R (and its channel) */
typedef struct tb_spectrum tb_spectrum;     /* eigendecomposition of R */
typedef struct tb_solution tb_solution;     /* phase vector + objective */
typedef struct tb_experiment tb_experiment; /* experiment configuration */
typedef struct tb_table tb_table;           /* aggregated results */

typedef struct tb_channel_params {
  int n_t;
  int n;
  double k1; /* may be INFINITY */
  double k2; /* may be INFINITY */
  double sigma2;
  uint64_t seed;
  double angle_tx;
  double angle_ris;
  double angle_user; /* NaN: same as angle_ris */
} tb_channel_params;

typedef struct tb_mo_options {
  int max_iters;
  double grad_tol;
  double armijo_beta;
  double armijo_sigma;
  tb_mo_init init;
  int restarts; /* extra seeded random starts, best run returned */
} tb_mo_options;

TORUS_BEAM_API const char* tb_version(void);
TORUS_BEAM_API const char* tb_last_error(void);
TORUS_BEAM_API const char* tb_status_string(tb_status status);

/* ---- channel ---------------------------------------------------------- */

TORUS_BEAM_API void tb_channel_params_default(tb_channel_params* params);

/* Samples a Rician channel and assembles R = Phi Phi^H. */
TORUS_BEAM_API tb_status tb_problem_sample(const tb_channel_params* params, tb_problem** out);

/* Wraps a caller-supplied Hermitian n x n matrix. */
TORUS_BEAM_API tb_status tb_problem_from_matrix(int n, const double* r_interleaved,
                                                tb_problem** out);

TORUS_BEAM_API void tb_problem_free(tb_problem* problem);
TORUS_BEAM_API int tb_problem_size(const tb_problem* problem);

/* Copies R into out (2 * n * n doubles). */
TORUS_BEAM_API tb_status tb_problem_matrix(const tb_problem* problem, double* out, size_t len);

/* |h2^T diag(exp(-j theta)) H1|^2 / sigma2 evaluated on the channel itself.
 * Only available for sampled problems. */
TORUS_BEAM_API tb_status tb_problem_snr_direct(const tb_problem* problem, const double* theta,
                                               size_t len, double* out);

/* ---- spectral --------------------------------------------------------- */

TORUS_BEAM_API tb_status tb_spectrum_compute(const tb_problem* problem, tb_spectrum** out);
TORUS_BEAM_API void tb_spectrum_free(tb_spectrum* spectrum);

/* Descending eigenvalues (len = n). */
TORUS_BEAM_API tb_status tb_spectrum_eigenvalues(const tb_spectrum* spectrum, double* out,
                                                 size_t len);

/* |v1_i| and arg v1_i of the canonical leading eigenvector (len = n each;
 * either pointer may be NULL). */
TORUS_BEAM_API tb_status tb_spectrum_leading(const tb_spectrum* spectrum, double* amplitudes,
                                             double* phases, size_t len);

/* Histogram of eigenvalues / scale: edges has bins + 1 entries, counts and
 * density have bins entries. */
TORUS_BEAM_API tb_status tb_spectrum_esd(const tb_spectrum* spectrum, double scale, int bins,
                                         int drop_zeros, double* edges, long* counts,
                                         double* density);

TORUS_BEAM_API tb_status tb_spike_prediction(double k1, double c, double* out);
TORUS_BEAM_API tb_status tb_bulk_right_edge(double k1, double c, double* out);

/* ---- solvers ---------------------------------------------------------- */

TORUS_BEAM_API void tb_mo_options_default(tb_mo_options* options);

TORUS_BEAM_API tb_status tb_evaluate(const tb_problem* problem, const double* theta, size_t len,
                                     double* out);
TORUS_BEAM_API tb_status tb_evaluate_cosine_form(const tb_problem* problem, const double* theta,
                                                 size_t len, double* out);

TORUS_BEAM_API tb_status tb_solve_ra(const tb_problem* problem, tb_solution** out);
/* options may be NULL for the defaults. */
TORUS_BEAM_API tb_status tb_solve_mo(const tb_problem* problem, const tb_mo_options* options,
                                     uint64_t seed, tb_solution** out);
TORUS_BEAM_API tb_status tb_brute_force(const tb_problem* problem, int levels,
                                        tb_solution** out);

TORUS_BEAM_API void tb_solution_free(tb_solution* solution);
TORUS_BEAM_API int tb_solution_size(const tb_solution* solution);
TORUS_BEAM_API tb_status tb_solution_theta(const tb_solution* solution, double* out, size_t len);
TORUS_BEAM_API double tb_solution_objective(const tb_solution* solution);
TORUS_BEAM_API double tb_solution_wall_time(const tb_solution* solution); /* seconds */
TORUS_BEAM_API int tb_solution_iterations(const tb_solution* solution);
TORUS_BEAM_API int tb_solution_degenerate(const tb_solution* solution);
TORUS_BEAM_API tb_solver tb_solution_solver(const tb_solution* solution);

/* ---- metrics ---------------------------------------------------------- */

TORUS_BEAM_API tb_status tb_snr(double objective, double sigma2, double* out);
TORUS_BEAM_API tb_status tb_performance_alpha(const tb_problem* problem,
                                              const tb_spectrum* spectrum,
                                              const tb_solution* ra_solution, double* out);
TORUS_BEAM_API tb_status tb_alignment_beta(const tb_spectrum* spectrum, double* out);

/* ---- experiments ------------------------------------------------------ */

/* kind: snr, time, ratio-k1, ratio-nt, spike or oracle. Starts from that
 * experiment's defaults. */
TORUS_BEAM_API tb_status tb_experiment_create(const char* kind, tb_experiment** out);
TORUS_BEAM_API void tb_experiment_free(tb_experiment* experiment);

/* Name of the configured experiment (valid while the handle lives). */
TORUS_BEAM_API const char* tb_experiment_kind(const tb_experiment* experiment);

TORUS_BEAM_API tb_status tb_experiment_load_config(tb_experiment* experiment, const char* path);
TORUS_BEAM_API tb_status tb_experiment_set(tb_experiment* experiment, const char* key,
                                           const char* value);
TORUS_BEAM_API tb_status tb_experiment_validate(const tb_experiment* experiment);

/* Number of recognized configuration keys and the i-th key. */
TORUS_BEAM_API size_t tb_config_key_count(void);
TORUS_BEAM_API const char* tb_config_key(size_t index);

TORUS_BEAM_API tb_status tb_experiment_run(const tb_experiment* experiment, tb_table** out);

TORUS_BEAM_API void tb_table_free(tb_table* table);
TORUS_BEAM_API size_t tb_table_rows(const tb_table* table);
TORUS_BEAM_API tb_status tb_table_value(const tb_table* table, size_t row, const char* column,
                                        double* out);

/* format: "csv" or "json"; path "-" writes to standard output. */
TORUS_BEAM_API tb_status tb_table_write(const tb_table* table, const char* path,
                                        const char* format);
/* Writes to the output path and format configured on the experiment. */
TORUS_BEAM_API tb_status tb_table_write_configured(const tb_table* table,
                                                   const tb_experiment* experiment);

/* Renders into a newly allocated NUL-terminated string; release it with
 * tb_string_free. */
TORUS_BEAM_API tb_status tb_table_render(const tb_table* table, const char* format, char** out);
TORUS_BEAM_API void tb_string_free(char* text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TORUS_BEAM_H */
