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

#include "torus_beam/errors.hpp"
#include "torus_beam/solvers.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace torus_beam::solvers {

// Depth-first scan of the phase grid. Fixing w_0..w_{d-1} leaves
//   F_d   = sum_{i,j<d} conj(w_i) R_ij w_j
//   c_d[k] = sum_{i<d} conj(w_i) R_ik        (k >= d)
// and appending w_d gives F_{d+1} = F_d + R_dd + 2 Re(c_d[d] w_d), so each
// leaf costs O(1) and each interior node O(N).
PhaseSolution brute_force(const channel::ProblemInstance& inst, int levels) {
  if (levels < 2)
    throw std::invalid_argument("brute_force: levels must be >= 2");
  const CMatrix& R = inst.R;
  const int n = inst.size();
  if (n < 1 || R.cols() != n)
    throw std::invalid_argument("brute_force: R must be square and non-empty");

  const double budget = std::pow(static_cast<double>(levels), n - 1);
  if (budget > kBruteForceBudget) {
    std::ostringstream msg;
    msg << "brute_force: grid of " << levels << "^" << (n - 1) << " = " << budget
        << " points exceeds the budget of " << kBruteForceBudget;
    throw BudgetError(msg.str());
  }

  const auto start = std::chrono::steady_clock::now();

  std::vector<Complex> roots(levels);
  for (int l = 0; l < levels; ++l)
    roots[l] = std::polar(1.0, kTwoPi * l / levels);

  // c[d] holds c_d for the current prefix; partial[d] holds F_d.
  std::vector<CVector> c(n + 1, CVector::Zero(n));
  std::vector<double> partial(n + 1, 0.0);
  std::vector<int> index(n, 0);

  auto push = [&](int d, int level) {
    const Complex wd = roots[level];
    partial[d + 1] = partial[d] + R(d, d).real() + 2.0 * (c[d](d) * wd).real();
    if (d + 1 < n) {
      c[d + 1].tail(n - d - 1) =
          c[d].tail(n - d - 1) + std::conj(wd) * R.row(d).tail(n - d - 1).transpose();
    }
  };

  // theta_1 = 0.
  push(0, 0);
  std::vector<int> best(n, 0);
  double best_value = n == 1 ? partial[1] : -std::numeric_limits<double>::infinity();
  if (n > 1) {
    int d = 1;
    index[1] = 0;
    while (d >= 1) {
      if (index[d] == levels) {
        --d;
        if (d >= 1)
          ++index[d];
        continue;
      }
      if (d == n - 1) {
        // Innermost level: sweep every root without further bookkeeping.
        const double base = partial[d] + R(d, d).real();
        const Complex cd = c[d](d);
        for (int l = 0; l < levels; ++l) {
          const double value = base + 2.0 * (cd * roots[l]).real();
          if (value > best_value) {
            best_value = value;
            index[d] = l;
            best = index;
          }
        }
        index[d] = levels;
        continue;
      }
      push(d, index[d]);
      ++d;
      index[d] = 0;
    }
  }

  PhaseSolution sol;
  sol.solver_tag = SolverTag::BRUTE;
  sol.theta.resize(n);
  for (int i = 0; i < n; ++i)
    sol.theta(i) = kTwoPi * best[i] / levels;
  sol.w = unit_modulus(sol.theta);
  sol.objective = sol.w.dot(R * sol.w).real();
  sol.iterations = static_cast<int>(budget); // grid points scanned
  sol.wall_time = std::chrono::steady_clock::now() - start;
  return sol;
}

} // namespace torus_beam::solvers
