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

#pragma once

#include "torus_beam/channel.hpp"
#include "torus_beam/spectral.hpp"
#include "torus_beam/types.hpp"

#include <chrono>
#include <cstdint>
#include <string_view>
#include <vector>

namespace torus_beam::solvers {

enum class SolverTag { RA, MO, BRUTE };

std::string_view to_string(SolverTag tag);

/// A point on the N-torus together with how it was obtained.
struct PhaseSolution {
  RVector theta;     ///< entries in [0, 2pi)
  CVector w;         ///< exp(j theta)
  double objective = 0.0; ///< w^H R w
  SolverTag solver_tag = SolverTag::RA;
  std::chrono::duration<double> wall_time{0.0};
  int iterations = 0; ///< MO: accepted steps, brute force: grid points, RA: 0
  bool degenerate = false; ///< RA only: lambda1 was repeated
  std::vector<double> objective_trace; ///< MO only: objective after each accepted step, starting point first
};

enum class MOInit { RA_WARM, RANDOM, ONES };

struct MOConfig {
  int max_iters = 1000;
  double grad_tol = 1e-6;     ///< on ||Riemannian gradient||, relative to trace(R)
  double armijo_beta = 0.5;   ///< backtracking contraction
  double armijo_sigma = 1e-4; ///< sufficient-increase constant
  MOInit init = MOInit::RA_WARM;
  int restarts = 0; ///< extra runs from seeded random points; the best run is returned

  void validate() const;
};

/// w^H R w for w = exp(j theta). Throws std::invalid_argument on a size
/// mismatch.
double evaluate(const CMatrix& R, const RVector& theta);

/// Same value through the phase-difference expansion
///   sum_k R_kk + sum_{i<j} 2 |R_ij| cos(theta_i - theta_j - arg R_ij).
double evaluate_cosine_form(const CMatrix& R, const RVector& theta);

/// Relaxation algorithm: keep the phases of the leading eigenvector.
/// Globally optimal when R has rank one.
PhaseSolution solve_ra(const spectral::LeadingPair& pair, const CMatrix& R);
PhaseSolution solve_ra(const spectral::Spectrum& spec, const CMatrix& R);

/// Timed end-to-end RA: leading eigenpair of R plus the phase projection.
/// wall_time covers both.
PhaseSolution solve_ra(const channel::ProblemInstance& inst);

/// Riemannian gradient ascent on the torus with Armijo backtracking and
/// elementwise-normalization retraction. `seed` drives MOInit::RANDOM and the
/// restarts. The returned solution (theta, trace, iterations) is that of the
/// best run; wall_time covers the whole call, including the warm start.
PhaseSolution solve_mo(const channel::ProblemInstance& inst, const MOConfig& cfg,
                       std::uint64_t seed);

/// Largest admissible levels^(N-1).
inline constexpr double kBruteForceBudget = 1e8;

/// Exhaustive search over the grid {0, 2pi/L, ...}^N with theta_1 pinned to
/// zero. Ties resolve to the lexicographically smallest grid point. Throws
/// BudgetError when levels^(N-1) exceeds kBruteForceBudget.
PhaseSolution brute_force(const channel::ProblemInstance& inst, int levels);

} // namespace torus_beam::solvers
