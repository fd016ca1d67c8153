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

#include "torus_beam/solvers.hpp"

#include "torus_beam/errors.hpp"
#include "torus_beam/rng.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace torus_beam::solvers {

using Clock = std::chrono::steady_clock;

std::string_view to_string(SolverTag tag) {
  switch (tag) {
  case SolverTag::RA:
    return "ra";
  case SolverTag::MO:
    return "mo";
  case SolverTag::BRUTE:
    return "brute";
  }
  return "unknown";
}

void MOConfig::validate() const {
  if (max_iters < 1)
    throw std::invalid_argument("MOConfig: max_iters must be >= 1");
  if (!(grad_tol > 0.0))
    throw std::invalid_argument("MOConfig: grad_tol must be positive");
  if (!(armijo_beta > 0.0 && armijo_beta < 1.0))
    throw std::invalid_argument("MOConfig: armijo_beta must lie in (0, 1)");
  if (!(armijo_sigma > 0.0 && armijo_sigma < 1.0))
    throw std::invalid_argument("MOConfig: armijo_sigma must lie in (0, 1)");
  if (restarts < 0)
    throw std::invalid_argument("MOConfig: restarts must be >= 0");
}

namespace {

void check_sizes(const CMatrix& R, Eigen::Index n, const char* who) {
  if (R.rows() != R.cols() || R.rows() != n) {
    std::ostringstream msg;
    msg << who << ": phase vector has length " << n << " but R is " << R.rows()
        << "x" << R.cols();
    throw std::invalid_argument(msg.str());
  }
}

// w^H (R w), with R w supplied.
double quadratic(const CVector& w, const CVector& Rw) { return w.dot(Rw).real(); }

} // namespace

double evaluate(const CMatrix& R, const RVector& theta) {
  check_sizes(R, theta.size(), "evaluate");
  const CVector w = unit_modulus(theta);
  return quadratic(w, R * w);
}

double evaluate_cosine_form(const CMatrix& R, const RVector& theta) {
  check_sizes(R, theta.size(), "evaluate_cosine_form");
  const Eigen::Index n = theta.size();
  double value = 0.0;
  for (Eigen::Index k = 0; k < n; ++k)
    value += R(k, k).real();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      value += 2.0 * std::abs(R(i, j)) * std::cos(theta(i) - theta(j) - std::arg(R(i, j)));
  return value;
}

PhaseSolution solve_ra(const spectral::LeadingPair& pair, const CMatrix& R) {
  check_sizes(R, pair.size(), "solve_ra");
  PhaseSolution sol;
  sol.solver_tag = SolverTag::RA;
  sol.theta = pair.phases;
  sol.w = unit_modulus(sol.theta);
  sol.objective = quadratic(sol.w, R * sol.w);
  sol.degenerate = pair.degenerate;
  return sol;
}

PhaseSolution solve_ra(const spectral::Spectrum& spec, const CMatrix& R) {
  return solve_ra(spec.leading(), R);
}

PhaseSolution solve_ra(const channel::ProblemInstance& inst) {
  const auto start = Clock::now();
  PhaseSolution sol = solve_ra(spectral::leading_eigenpair(inst.R), inst.R);
  sol.wall_time = Clock::now() - start;
  return sol;
}

namespace {

// Projection of the Euclidean gradient onto the tangent space of the torus
// at w: g - Re(g .* conj(w)) .* w.
CVector riemannian_gradient(const CVector& w, const CVector& g) {
  CVector r(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i)
    r(i) = g(i) - (g(i) * std::conj(w(i))).real() * w(i);
  return r;
}

CVector retract(const CVector& w, const CVector& step, double alpha) {
  CVector out(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    const Complex z = w(i) + alpha * step(i);
    const double mag = std::abs(z);
    // A step can cancel an entry exactly; keep the old point there.
    out(i) = mag > 0.0 ? z / mag : w(i);
  }
  return out;
}

CVector initial_point(const channel::ProblemInstance& inst, MOInit init,
                      std::uint64_t seed) {
  const int n = inst.size();
  switch (init) {
  case MOInit::RA_WARM:
    return unit_modulus(spectral::leading_eigenpair(inst.R).phases);
  case MOInit::RANDOM: {
    GaussianStream stream(seed);
    RVector theta(n);
    for (int i = 0; i < n; ++i)
      theta(i) = kTwoPi * stream.uniform();
    return unit_modulus(theta);
  }
  case MOInit::ONES:
    break;
  }
  return CVector::Ones(n);
}

} // namespace

namespace {

// One run of Armijo ascent from w. Fills theta, w, objective, iterations and
// the objective trace.
PhaseSolution ascend(const CMatrix& R, CVector w, const MOConfig& cfg) {
  const Eigen::Index n = R.rows();
  CVector Rw = R * w;
  double value = quadratic(w, Rw);

  const double trace = R.diagonal().real().sum();
  const double stop = cfg.grad_tol * trace; // grad_tol * N * mean diagonal
  // Step scale: curvature of w^H R w along a tangent direction is at most
  // 2 lambda1 <= 2 trace(R).
  double step = trace > 0.0 ? 1.0 / trace : 1.0;

  PhaseSolution sol;
  sol.solver_tag = SolverTag::MO;
  sol.objective_trace.push_back(value);

  int iter = 0;
  for (; iter < cfg.max_iters; ++iter) {
    const CVector grad = riemannian_gradient(w, 2.0 * Rw);
    const double grad_sq = grad.squaredNorm();
    if (!std::isfinite(grad_sq))
      throw NumericError("solve_mo: non-finite Riemannian gradient at iteration " +
                         std::to_string(iter));
    if (std::sqrt(grad_sq) <= stop)
      break;

    // Armijo backtracking from twice the last accepted step.
    double alpha = 2.0 * step;
    bool accepted = false;
    CVector trial, R_trial;
    double trial_value = value;
    for (int bt = 0; bt < 60; ++bt) {
      trial = retract(w, grad, alpha);
      R_trial.noalias() = R * trial;
      trial_value = quadratic(trial, R_trial);
      if (trial_value >= value + cfg.armijo_sigma * alpha * grad_sq) {
        accepted = true;
        break;
      }
      alpha *= cfg.armijo_beta;
    }
    if (!accepted)
      break; // no ascent left at machine precision
    step = alpha;
    w.swap(trial);
    Rw.swap(R_trial);
    value = trial_value;
    sol.objective_trace.push_back(value);
  }

  sol.theta.resize(n);
  for (Eigen::Index i = 0; i < n; ++i)
    sol.theta(i) = wrap_phase(std::arg(w(i)));
  // Unit modulus exactly, consistent with theta.
  sol.w = unit_modulus(sol.theta);
  sol.objective = quadratic(sol.w, R * sol.w);
  sol.iterations = iter;
  return sol;
}

} // namespace

PhaseSolution solve_mo(const channel::ProblemInstance& inst, const MOConfig& cfg,
                       std::uint64_t seed) {
  cfg.validate();
  const auto start = Clock::now();

  PhaseSolution best = ascend(inst.R, initial_point(inst, cfg.init, seed), cfg);
  for (int r = 1; r <= cfg.restarts; ++r) {
    PhaseSolution next =
        ascend(inst.R, initial_point(inst, MOInit::RANDOM, mix64(seed + r)), cfg);
    if (next.objective > best.objective)
      best = std::move(next);
  }
  best.wall_time = Clock::now() - start;
  return best;
}

} // namespace torus_beam::solvers
