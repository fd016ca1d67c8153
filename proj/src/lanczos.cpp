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
#include "torus_beam/rng.hpp"
#include "torus_beam/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

namespace torus_beam::spectral {

namespace {

constexpr std::uint64_t kStartSeed = 0x6c616e637a6f73ull;

CVector random_unit(GaussianStream& stream, Eigen::Index n) {
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i)
    v(i) = stream.complex_normal();
  return v / v.norm();
}

// Two passes of classical Gram-Schmidt against the first k columns of Q.
void orthogonalize(const CMatrix& Q, Eigen::Index k, CVector& u) {
  for (int pass = 0; pass < 2; ++pass)
    u.noalias() -= Q.leftCols(k) * (Q.leftCols(k).adjoint() * u);
}

} // namespace

LeadingPair leading_eigenpair(const CMatrix& R, const LanczosOptions& opts) {
  detail::check_hermitian(R);
  const Eigen::Index n = R.rows();
  const Eigen::Index m = std::min<Eigen::Index>(std::max(opts.subspace, 2), n);
  if (m >= n)
    return eig_hermitian(R).leading();

  GaussianStream stream(kStartSeed);
  CMatrix Q(n, m);
  RVector alpha(m), beta(m);
  CVector x = random_unit(stream, n);
  CVector u(n);

  double theta1 = 0.0, theta2 = 0.0;
  bool converged = false;
  for (int cycle = 0; cycle <= opts.max_restarts && !converged; ++cycle) {
    Q.col(0) = x;
    double norm_estimate = 0.0;
    for (Eigen::Index k = 0; k < m; ++k) {
      u.noalias() = R * Q.col(k);
      alpha(k) = Q.col(k).dot(u).real();
      orthogonalize(Q, k + 1, u);
      const double b = u.norm();
      norm_estimate = std::max(norm_estimate, std::abs(alpha(k)) + b);
      beta(k) = b;
      if (!std::isfinite(b))
        throw NumericError("leading_eigenpair: non-finite Lanczos vector");
      if (k + 1 == m)
        break;
      if (b <= 1e-12 * norm_estimate) {
        // Invariant subspace found: continue the basis with a new direction.
        beta(k) = 0.0;
        u = random_unit(stream, n);
        orthogonalize(Q, k + 1, u);
        Q.col(k + 1) = u / u.norm();
      } else {
        Q.col(k + 1) = u / b;
      }
    }

    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index k = 0; k < m; ++k) {
      T(k, k) = alpha(k);
      if (k + 1 < m)
        T(k, k + 1) = T(k + 1, k) = beta(k);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(T);
    const Eigen::VectorXd s = small.eigenvectors().col(m - 1);
    theta1 = small.eigenvalues()(m - 1);
    theta2 = small.eigenvalues()(m - 2);
    const double residual = std::abs(beta(m - 1) * s(m - 1));

    x = Q * s.cast<Complex>();
    x /= x.norm();
    converged = norm_estimate == 0.0 || residual <= opts.tol * std::abs(theta1);
  }

  if (!converged)
    return eig_hermitian(R).leading();

  LeadingPair p;
  p.lambda1 = theta1;
  p.lambda2 = theta2;
  p.v1 = x;
  detail::canonicalize_phase(p.v1);
  detail::split_phases(p.v1, p.amplitudes, p.phases);
  p.degenerate = std::abs(theta1 - theta2) <= 1e-9 * std::abs(theta1);
  return p;
}

} // namespace torus_beam::spectral
