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

#include "torus_beam/spectral.hpp"

#include "torus_beam/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace torus_beam::spectral {

namespace detail {

void check_hermitian(const CMatrix& R) {
  if (R.rows() != R.cols() || R.rows() == 0)
    throw std::invalid_argument("eigendecomposition: matrix must be square and non-empty");
  const double scale = R.cwiseAbs().maxCoeff();
  if (!std::isfinite(scale))
    throw std::invalid_argument("eigendecomposition: matrix has non-finite entries");
  const double asym = (R - R.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-10 * scale) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: max |R - R^H| = " << asym
        << " exceeds 1e-10 * max |R| = " << 1e-10 * scale;
    throw NonHermitianError(msg.str());
  }
}

void canonicalize_phase(Eigen::Ref<CVector> v) {
  if (v.size() == 0)
    return;
  const double peak = v.cwiseAbs().maxCoeff();
  if (peak == 0.0)
    return;
  // First entry within rounding of the peak, so near-ties resolve by index.
  Eigen::Index pick = 0;
  while (std::abs(v(pick)) < peak * (1.0 - 1e-9))
    ++pick;
  const Complex rot = std::conj(v(pick)) / std::abs(v(pick));
  v *= rot;
  v(pick) = Complex(std::abs(v(pick)), 0.0);
}

void split_phases(const CVector& v, RVector& amplitudes, RVector& phases) {
  const Eigen::Index n = v.size();
  amplitudes.resize(n);
  phases.resize(n);
  const double peak = n > 0 ? v.cwiseAbs().maxCoeff() : 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    amplitudes(i) = std::abs(v(i));
    // The phase of a vanishing entry is undefined; pin it to zero.
    phases(i) = amplitudes(i) <= 1e-14 * peak ? 0.0 : wrap_phase(std::arg(v(i)));
  }
}

} // namespace detail

LeadingPair Spectrum::leading() const {
  LeadingPair p;
  p.lambda1 = eigenvalues(0);
  p.lambda2 = size() > 1 ? eigenvalues(1) : -std::numeric_limits<double>::infinity();
  p.v1 = eigenvectors.col(0);
  p.amplitudes = amplitudes1;
  p.phases = phases1;
  p.degenerate = size() > 1 &&
                 std::abs(p.lambda1 - p.lambda2) <= 1e-9 * std::abs(p.lambda1);
  return p;
}

Spectrum eig_hermitian(const CMatrix& R) {
  detail::check_hermitian(R);
  const Eigen::Index n = R.rows();
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(R, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw NumericError("eig_hermitian: eigensolver did not converge");

  Spectrum spec;
  spec.eigenvalues = solver.eigenvalues().reverse();
  spec.eigenvectors = solver.eigenvectors().rowwise().reverse();
  for (Eigen::Index j = 0; j < n; ++j)
    detail::canonicalize_phase(spec.eigenvectors.col(j));
  detail::split_phases(spec.eigenvectors.col(0), spec.amplitudes1, spec.phases1);
  return spec;
}

RVector eigenvalues_hermitian(const CMatrix& R) {
  detail::check_hermitian(R);
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(R, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericError("eigenvalues_hermitian: eigensolver did not converge");
  return solver.eigenvalues().reverse();
}

int numerical_rank(const RVector& ev) {
  if (ev.size() == 0 || !(ev(0) > 0.0))
    return 0;
  const double cut = kRankTolerance * ev(0);
  return static_cast<int>((ev.array() > cut).count());
}

double spike_prediction(double K1, double c) {
  if (!(c > 0.0) || std::isinf(c))
    throw std::invalid_argument("spike_prediction: c must be positive and finite");
  if (!(K1 >= 0.0))
    throw std::invalid_argument("spike_prediction: K1 must be >= 0");
  if (K1 > std::sqrt(c))
    return 1.0 / c + 1.0 / K1;
  return bulk_right_edge(K1, c);
}

double bulk_right_edge(double K1, double c) {
  if (!(c > 0.0) || std::isinf(c))
    throw std::invalid_argument("bulk_right_edge: c must be positive and finite");
  if (!(K1 >= 0.0))
    throw std::invalid_argument("bulk_right_edge: K1 must be >= 0");
  const double root = 1.0 + std::sqrt(c);
  return root * root / (c * (K1 + 1.0));
}

Histogram esd(const RVector& eigenvalues, double scale, int bins, bool drop_zeros) {
  if (bins < 1)
    throw std::invalid_argument("esd: bins must be >= 1");
  if (!(scale > 0.0))
    throw std::invalid_argument("esd: scale must be positive");

  const double top = eigenvalues.size() > 0 ? eigenvalues.maxCoeff() : 0.0;
  std::vector<double> values;
  values.reserve(eigenvalues.size());
  for (double ev : eigenvalues) {
    if (drop_zeros && !(ev > kRankTolerance * top))
      continue;
    values.push_back(ev / scale);
  }

  Histogram h;
  h.counts.assign(bins, 0);
  h.normalized_density.assign(bins, 0.0);
  double lo = 0.0, hi = 1.0;
  if (!values.empty()) {
    lo = *std::min_element(values.begin(), values.end());
    hi = *std::max_element(values.begin(), values.end());
    if (hi - lo <= 1e-12 * std::max(1.0, std::abs(hi))) {
      // Degenerate range: one unit-width window centred on the values.
      lo -= 0.5;
      hi += 0.5;
    }
  }
  const double width = (hi - lo) / bins;
  h.bin_edges.resize(bins + 1);
  for (int b = 0; b <= bins; ++b)
    h.bin_edges[b] = lo + width * b;
  h.bin_edges[bins] = hi;

  for (double x : values) {
    int b = static_cast<int>((x - lo) / width);
    h.counts[std::clamp(b, 0, bins - 1)] += 1;
  }
  if (!values.empty()) {
    const double total = static_cast<double>(values.size());
    for (int b = 0; b < bins; ++b)
      h.normalized_density[b] = h.counts[b] / (total * (h.bin_edges[b + 1] - h.bin_edges[b]));
  }
  return h;
}

Histogram esd(const Spectrum& spec, double scale, int bins, bool drop_zeros) {
  return esd(spec.eigenvalues, scale, bins, drop_zeros);
}

} // namespace torus_beam::spectral
