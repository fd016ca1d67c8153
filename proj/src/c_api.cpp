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

#include "torus_beam/torus_beam.h"

#include "torus_beam/channel.hpp"
#include "torus_beam/config.hpp"
#include "torus_beam/errors.hpp"
#include "torus_beam/experiment.hpp"
#include "torus_beam/metrics.hpp"
#include "torus_beam/solvers.hpp"
#include "torus_beam/spectral.hpp"
#include "torus_beam/table_io.hpp"

#include <cmath>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

namespace tb = torus_beam;

struct tb_problem {
  tb::channel::ProblemInstance instance;
  std::optional<tb::channel::ChannelRealization> channel;
};

struct tb_spectrum {
  tb::spectral::Spectrum spectrum;
};

struct tb_solution {
  tb::solvers::PhaseSolution solution;
};

struct tb_experiment {
  tb::experiment::ExperimentConfig config;
  std::string kind_name;
};

struct tb_table {
  tb::experiment::ResultTable table;
};

namespace {

thread_local std::string last_error;

template <class F> tb_status guarded(F&& body) noexcept {
  try {
    body();
    return TB_OK;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return TB_ERR_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    last_error = e.what();
    return TB_ERR_INVALID_ARGUMENT;
  } catch (const tb::NonHermitianError& e) {
    last_error = e.what();
    return TB_ERR_NOT_HERMITIAN;
  } catch (const tb::BudgetError& e) {
    last_error = e.what();
    return TB_ERR_BUDGET;
  } catch (const tb::NumericError& e) {
    last_error = e.what();
    return TB_ERR_NUMERIC;
  } catch (const tb::IoError& e) {
    last_error = e.what();
    return TB_ERR_IO;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TB_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return TB_ERR_INTERNAL;
  }
}

void require(bool ok, const char* msg) {
  if (!ok)
    throw std::invalid_argument(msg);
}

void require_len(size_t got, size_t want, const char* who) {
  if (got != want)
    throw std::invalid_argument(std::string(who) + ": buffer length " + std::to_string(got) +
                                " does not match required " + std::to_string(want));
}

tb::RVector to_rvector(const double* data, size_t len) {
  tb::RVector v(static_cast<Eigen::Index>(len));
  for (size_t i = 0; i < len; ++i)
    v(static_cast<Eigen::Index>(i)) = data[i];
  return v;
}

tb::solvers::MOConfig to_mo_config(const tb_mo_options* o) {
  tb::solvers::MOConfig cfg;
  if (!o)
    return cfg;
  cfg.max_iters = o->max_iters;
  cfg.grad_tol = o->grad_tol;
  cfg.armijo_beta = o->armijo_beta;
  cfg.armijo_sigma = o->armijo_sigma;
  cfg.restarts = o->restarts;
  switch (o->init) {
  case TB_MO_INIT_RA_WARM:
    cfg.init = tb::solvers::MOInit::RA_WARM;
    break;
  case TB_MO_INIT_RANDOM:
    cfg.init = tb::solvers::MOInit::RANDOM;
    break;
  case TB_MO_INIT_ONES:
    cfg.init = tb::solvers::MOInit::ONES;
    break;
  default:
    throw std::invalid_argument("tb_mo_options: unknown init");
  }
  return cfg;
}

} // namespace

extern "C" {

const char* tb_version(void) { return "0.1.0"; }

const char* tb_last_error(void) { return last_error.c_str(); }

const char* tb_status_string(tb_status status) {
  switch (status) {
  case TB_OK:
    return "ok";
  case TB_ERR_INVALID_ARGUMENT:
    return "invalid argument";
  case TB_ERR_NOT_HERMITIAN:
    return "matrix not Hermitian";
  case TB_ERR_BUDGET:
    return "evaluation budget exceeded";
  case TB_ERR_NUMERIC:
    return "numerical failure";
  case TB_ERR_IO:
    return "I/O error";
  case TB_ERR_INTERNAL:
    return "internal error";
  }
  return "unknown status";
}

void tb_channel_params_default(tb_channel_params* p) {
  if (!p)
    return;
  p->n_t = 1;
  p->n = 1;
  p->k1 = 0.0;
  p->k2 = 0.0;
  p->sigma2 = 1.0;
  p->seed = 0;
  p->angle_tx = 0.3;
  p->angle_ris = 0.7;
  p->angle_user = NAN;
}

tb_status tb_problem_sample(const tb_channel_params* p, tb_problem** out) {
  return guarded([&] {
    require(p && out, "tb_problem_sample: null argument");
    tb::channel::RicianConfig cfg;
    cfg.n_t = p->n_t;
    cfg.N = p->n;
    cfg.K1 = p->k1;
    cfg.K2 = p->k2;
    cfg.sigma2 = p->sigma2;
    cfg.seed = p->seed;
    cfg.validate();
    std::optional<double> user;
    if (!std::isnan(p->angle_user))
      user = p->angle_user;
    const auto los = tb::channel::make_los(p->n_t, p->n, p->angle_tx, p->angle_ris, user);
    auto handle = std::make_unique<tb_problem>();
    handle->channel = tb::channel::sample_channel(cfg, los);
    handle->instance = tb::channel::assemble(*handle->channel);
    *out = handle.release();
  });
}

tb_status tb_problem_from_matrix(int n, const double* r, tb_problem** out) {
  return guarded([&] {
    require(r && out, "tb_problem_from_matrix: null argument");
    require(n >= 1, "tb_problem_from_matrix: n must be >= 1");
    tb::CMatrix R(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        const size_t k = 2 * (static_cast<size_t>(j) * n + i);
        R(i, j) = tb::Complex(r[k], r[k + 1]);
      }
    auto handle = std::make_unique<tb_problem>();
    handle->instance = tb::channel::from_matrix(R);
    *out = handle.release();
  });
}

void tb_problem_free(tb_problem* problem) { delete problem; }

int tb_problem_size(const tb_problem* problem) { return problem ? problem->instance.size() : 0; }

tb_status tb_problem_matrix(const tb_problem* problem, double* out, size_t len) {
  return guarded([&] {
    require(problem && out, "tb_problem_matrix: null argument");
    const auto& R = problem->instance.R;
    const size_t n = static_cast<size_t>(R.rows());
    require_len(len, 2 * n * n, "tb_problem_matrix");
    for (size_t j = 0; j < n; ++j)
      for (size_t i = 0; i < n; ++i) {
        out[2 * (j * n + i)] = R(i, j).real();
        out[2 * (j * n + i) + 1] = R(i, j).imag();
      }
  });
}

tb_status tb_problem_snr_direct(const tb_problem* problem, const double* theta, size_t len,
                                double* out) {
  return guarded([&] {
    require(problem && theta && out, "tb_problem_snr_direct: null argument");
    require(problem->channel.has_value(),
            "tb_problem_snr_direct: problem was not sampled from a channel");
    *out = tb::metrics::snr_direct(*problem->channel, to_rvector(theta, len));
  });
}

tb_status tb_spectrum_compute(const tb_problem* problem, tb_spectrum** out) {
  return guarded([&] {
    require(problem && out, "tb_spectrum_compute: null argument");
    auto handle = std::make_unique<tb_spectrum>();
    handle->spectrum = tb::spectral::eig_hermitian(problem->instance.R);
    *out = handle.release();
  });
}

void tb_spectrum_free(tb_spectrum* spectrum) { delete spectrum; }

tb_status tb_spectrum_eigenvalues(const tb_spectrum* spectrum, double* out, size_t len) {
  return guarded([&] {
    require(spectrum && out, "tb_spectrum_eigenvalues: null argument");
    const auto& ev = spectrum->spectrum.eigenvalues;
    require_len(len, static_cast<size_t>(ev.size()), "tb_spectrum_eigenvalues");
    for (size_t i = 0; i < len; ++i)
      out[i] = ev(static_cast<Eigen::Index>(i));
  });
}

tb_status tb_spectrum_leading(const tb_spectrum* spectrum, double* amplitudes, double* phases,
                              size_t len) {
  return guarded([&] {
    require(spectrum != nullptr, "tb_spectrum_leading: null spectrum");
    const auto& s = spectrum->spectrum;
    require_len(len, static_cast<size_t>(s.size()), "tb_spectrum_leading");
    for (size_t i = 0; i < len; ++i) {
      if (amplitudes)
        amplitudes[i] = s.amplitudes1(static_cast<Eigen::Index>(i));
      if (phases)
        phases[i] = s.phases1(static_cast<Eigen::Index>(i));
    }
  });
}

tb_status tb_spectrum_esd(const tb_spectrum* spectrum, double scale, int bins, int drop_zeros,
                          double* edges, long* counts, double* density) {
  return guarded([&] {
    require(spectrum != nullptr, "tb_spectrum_esd: null spectrum");
    const auto h = tb::spectral::esd(spectrum->spectrum, scale, bins, drop_zeros != 0);
    for (int b = 0; b < bins; ++b) {
      if (counts)
        counts[b] = h.counts[b];
      if (density)
        density[b] = h.normalized_density[b];
    }
    if (edges)
      for (int b = 0; b <= bins; ++b)
        edges[b] = h.bin_edges[b];
  });
}

tb_status tb_spike_prediction(double k1, double c, double* out) {
  return guarded([&] {
    require(out != nullptr, "tb_spike_prediction: null output");
    *out = tb::spectral::spike_prediction(k1, c);
  });
}

tb_status tb_bulk_right_edge(double k1, double c, double* out) {
  return guarded([&] {
    require(out != nullptr, "tb_bulk_right_edge: null output");
    *out = tb::spectral::bulk_right_edge(k1, c);
  });
}

void tb_mo_options_default(tb_mo_options* o) {
  if (!o)
    return;
  const tb::solvers::MOConfig d;
  o->max_iters = d.max_iters;
  o->grad_tol = d.grad_tol;
  o->armijo_beta = d.armijo_beta;
  o->armijo_sigma = d.armijo_sigma;
  o->init = TB_MO_INIT_RA_WARM;
  o->restarts = d.restarts;
}

tb_status tb_evaluate(const tb_problem* problem, const double* theta, size_t len, double* out) {
  return guarded([&] {
    require(problem && theta && out, "tb_evaluate: null argument");
    *out = tb::solvers::evaluate(problem->instance.R, to_rvector(theta, len));
  });
}

tb_status tb_evaluate_cosine_form(const tb_problem* problem, const double* theta, size_t len,
                                  double* out) {
  return guarded([&] {
    require(problem && theta && out, "tb_evaluate_cosine_form: null argument");
    *out = tb::solvers::evaluate_cosine_form(problem->instance.R, to_rvector(theta, len));
  });
}

tb_status tb_solve_ra(const tb_problem* problem, tb_solution** out) {
  return guarded([&] {
    require(problem && out, "tb_solve_ra: null argument");
    auto handle = std::make_unique<tb_solution>();
    handle->solution = tb::solvers::solve_ra(problem->instance);
    *out = handle.release();
  });
}

tb_status tb_solve_mo(const tb_problem* problem, const tb_mo_options* options, uint64_t seed,
                      tb_solution** out) {
  return guarded([&] {
    require(problem && out, "tb_solve_mo: null argument");
    auto handle = std::make_unique<tb_solution>();
    handle->solution = tb::solvers::solve_mo(problem->instance, to_mo_config(options), seed);
    *out = handle.release();
  });
}

tb_status tb_brute_force(const tb_problem* problem, int levels, tb_solution** out) {
  return guarded([&] {
    require(problem && out, "tb_brute_force: null argument");
    auto handle = std::make_unique<tb_solution>();
    handle->solution = tb::solvers::brute_force(problem->instance, levels);
    *out = handle.release();
  });
}

void tb_solution_free(tb_solution* solution) { delete solution; }

int tb_solution_size(const tb_solution* s) {
  return s ? static_cast<int>(s->solution.theta.size()) : 0;
}

tb_status tb_solution_theta(const tb_solution* s, double* out, size_t len) {
  return guarded([&] {
    require(s && out, "tb_solution_theta: null argument");
    require_len(len, static_cast<size_t>(s->solution.theta.size()), "tb_solution_theta");
    for (size_t i = 0; i < len; ++i)
      out[i] = s->solution.theta(static_cast<Eigen::Index>(i));
  });
}

double tb_solution_objective(const tb_solution* s) { return s ? s->solution.objective : NAN; }

double tb_solution_wall_time(const tb_solution* s) {
  return s ? s->solution.wall_time.count() : NAN;
}

int tb_solution_iterations(const tb_solution* s) { return s ? s->solution.iterations : 0; }

int tb_solution_degenerate(const tb_solution* s) { return s && s->solution.degenerate ? 1 : 0; }

tb_solver tb_solution_solver(const tb_solution* s) {
  if (!s)
    return TB_SOLVER_RA;
  switch (s->solution.solver_tag) {
  case tb::solvers::SolverTag::RA:
    return TB_SOLVER_RA;
  case tb::solvers::SolverTag::MO:
    return TB_SOLVER_MO;
  case tb::solvers::SolverTag::BRUTE:
    return TB_SOLVER_BRUTE;
  }
  return TB_SOLVER_RA;
}

tb_status tb_snr(double objective, double sigma2, double* out) {
  return guarded([&] {
    require(out != nullptr, "tb_snr: null output");
    *out = tb::metrics::snr(objective, sigma2);
  });
}

tb_status tb_performance_alpha(const tb_problem* problem, const tb_spectrum* spectrum,
                               const tb_solution* ra, double* out) {
  return guarded([&] {
    require(problem && spectrum && ra && out, "tb_performance_alpha: null argument");
    *out = tb::metrics::performance_alpha(problem->instance.R, spectrum->spectrum,
                                          ra->solution.w);
  });
}

tb_status tb_alignment_beta(const tb_spectrum* spectrum, double* out) {
  return guarded([&] {
    require(spectrum && out, "tb_alignment_beta: null argument");
    *out = tb::metrics::alignment_beta(spectrum->spectrum);
  });
}

tb_status tb_experiment_create(const char* kind, tb_experiment** out) {
  return guarded([&] {
    require(kind && out, "tb_experiment_create: null argument");
    auto handle = std::make_unique<tb_experiment>();
    handle->config =
        tb::experiment::ExperimentConfig::defaults(tb::experiment::parse_experiment(kind));
    handle->kind_name = std::string(tb::experiment::to_string(handle->config.experiment));
    *out = handle.release();
  });
}

void tb_experiment_free(tb_experiment* experiment) { delete experiment; }

const char* tb_experiment_kind(const tb_experiment* experiment) {
  return experiment ? experiment->kind_name.c_str() : "";
}

tb_status tb_experiment_load_config(tb_experiment* experiment, const char* path) {
  return guarded([&] {
    require(experiment && path, "tb_experiment_load_config: null argument");
    tb::experiment::apply_config_file(experiment->config, path);
    experiment->kind_name = std::string(tb::experiment::to_string(experiment->config.experiment));
  });
}

tb_status tb_experiment_set(tb_experiment* experiment, const char* key, const char* value) {
  return guarded([&] {
    require(experiment && key && value, "tb_experiment_set: null argument");
    experiment->config.set(key, value);
    experiment->kind_name = std::string(tb::experiment::to_string(experiment->config.experiment));
  });
}

tb_status tb_experiment_validate(const tb_experiment* experiment) {
  return guarded([&] {
    require(experiment != nullptr, "tb_experiment_validate: null argument");
    experiment->config.validate();
  });
}

size_t tb_config_key_count(void) { return tb::experiment::config_keys().size(); }

const char* tb_config_key(size_t index) {
  const auto& keys = tb::experiment::config_keys();
  return index < keys.size() ? keys[index].data() : nullptr;
}

tb_status tb_experiment_run(const tb_experiment* experiment, tb_table** out) {
  return guarded([&] {
    require(experiment && out, "tb_experiment_run: null argument");
    auto handle = std::make_unique<tb_table>();
    handle->table = tb::experiment::run(experiment->config);
    *out = handle.release();
  });
}

void tb_table_free(tb_table* table) { delete table; }

size_t tb_table_rows(const tb_table* table) { return table ? table->table.rows.size() : 0; }

tb_status tb_table_value(const tb_table* table, size_t row, const char* column, double* out) {
  return guarded([&] {
    require(table && column && out, "tb_table_value: null argument");
    *out = table->table.value(row, column);
  });
}

tb_status tb_table_write(const tb_table* table, const char* path, const char* format) {
  return guarded([&] {
    require(table && path && format, "tb_table_write: null argument");
    tb::experiment::emit(table->table, path, tb::experiment::parse_format(format));
  });
}

tb_status tb_table_write_configured(const tb_table* table, const tb_experiment* experiment) {
  return guarded([&] {
    require(table && experiment, "tb_table_write_configured: null argument");
    tb::experiment::emit(table->table, experiment->config.output_path,
                         experiment->config.output_format);
  });
}

tb_status tb_table_render(const tb_table* table, const char* format, char** out) {
  return guarded([&] {
    require(table && format && out, "tb_table_render: null argument");
    const std::string text =
        tb::experiment::render(table->table, tb::experiment::parse_format(format));
    char* buf = new char[text.size() + 1];
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
  });
}

void tb_string_free(char* text) { delete[] text; }

} // extern "C"
