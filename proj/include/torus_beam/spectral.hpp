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

#include "torus_beam/types.hpp"

#include <vector>

namespace torus_beam::spectral {

/// Leading eigenpair of R with v1 split into amplitudes and phases.
struct LeadingPair {
  double lambda1 = 0.0;
  double lambda2 = 0.0; ///< second eigenvalue (Ritz estimate on the Krylov path)
  CVector v1;           ///< unit norm, canonical global phase
  RVector amplitudes;   ///< |v1_i|
  RVector phases;       ///< arg v1_i in [0, 2pi); 0 where |v1_i| vanishes
  bool degenerate = false; ///< lambda1 repeated within 1e-9 relative

  int size() const { return static_cast<int>(v1.size()); }
};

/// Full eigendecomposition: eigenvalues descending, column i of eigenvectors
/// paired with eigenvalue i. Every column has its largest-magnitude entry
/// rotated onto the nonnegative real axis.
struct Spectrum {
  RVector eigenvalues;
  CMatrix eigenvectors;
  RVector amplitudes1;
  RVector phases1;

  int size() const { return static_cast<int>(eigenvalues.size()); }
  LeadingPair leading() const;
};

struct Histogram {
  std::vector<double> bin_edges; ///< bins + 1 increasing edges
  std::vector<long> counts;
  std::vector<double> normalized_density; ///< integrates to one over the edges
};

/// Relative tolerance for classifying eigenvalues as structural zeros.
inline constexpr double kRankTolerance = 1e-9;

/// Rejects (NonHermitianError) input with max|R - R^H| > 1e-10 max|R|.
Spectrum eig_hermitian(const CMatrix& R);

/// Eigenvalues only, descending. Same Hermitian check.
RVector eigenvalues_hermitian(const CMatrix& R);

/// Number of eigenvalues above kRankTolerance * lambda1.
int numerical_rank(const RVector& descending_eigenvalues);

struct LanczosOptions {
  int subspace = 32;     ///< Krylov vectors built per cycle (capped at N)
  int max_restarts = 30;
  double tol = 1e-12;    ///< residual ||R x - theta x|| relative to |theta|
};

/// Leading eigenpair by restarted Lanczos with full reorthogonalization.
///
/// Each cycle always builds `subspace` basis vectors; an invariant subspace
/// (exact breakdown) is extended with a fresh pseudo-random direction, so the
/// work per cycle does not depend on the rank of R. Matrices of rank below
/// the subspace size converge in one cycle. If the restarts run out the
/// dense solver is used instead.
LeadingPair leading_eigenpair(const CMatrix& R, const LanczosOptions& opts = {});

/// Almost-sure limit of the top eigenvalue of R/N for N/n_t -> c:
/// 1/c + 1/K1 when K1 > sqrt(c), otherwise the bulk edge. K1 may be +inf.
double spike_prediction(double K1, double c);

/// Right edge (1 + sqrt(c))^2 / (c (K1 + 1)) of the limiting bulk of R/N.
double bulk_right_edge(double K1, double c);

/// Histogram of eigenvalues / scale over their range. With drop_zeros the
/// structural zeros (below kRankTolerance * lambda1) are excluded.
Histogram esd(const Spectrum& spec, double scale, int bins, bool drop_zeros);
Histogram esd(const RVector& eigenvalues, double scale, int bins, bool drop_zeros);

namespace detail {
/// Rotates v so its largest-magnitude entry is real and nonnegative.
void canonicalize_phase(Eigen::Ref<CVector> v);
/// Phase split of a unit eigenvector.
void split_phases(const CVector& v, RVector& amplitudes, RVector& phases);
/// Throws NonHermitianError when R is not Hermitian to 1e-10 relative.
void check_hermitian(const CMatrix& R);
} // namespace detail

} // namespace torus_beam::spectral
