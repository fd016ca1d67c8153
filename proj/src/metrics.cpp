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

#include "torus_beam/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace torus_beam::metrics {

double snr(double objective, double sigma2) {
  if (!(sigma2 > 0.0))
    throw std::invalid_argument("snr: sigma2 must be positive");
  if (objective < 0.0)
    throw std::invalid_argument("snr: objective must be nonnegative");
  return objective / sigma2;
}

double received_power(const channel::ChannelRealization& ch, const RVector& theta) {
  if (theta.size() != ch.h2.size())
    throw std::invalid_argument("received_power: theta length does not match N");
  CVector diag(theta.size());
  for (Eigen::Index i = 0; i < theta.size(); ++i)
    diag(i) = std::polar(1.0, -theta(i));
  const Eigen::RowVectorXcd effective = ch.h2.transpose() * diag.asDiagonal() * ch.H1;
  return effective.squaredNorm();
}

double snr_direct(const channel::ChannelRealization& ch, const RVector& theta) {
  return snr(received_power(ch, theta), ch.cfg.sigma2);
}

double performance_alpha(const CMatrix& R, const spectral::LeadingPair& pair,
                         const CVector& w_ra) {
  if (!(pair.lambda1 > 0.0))
    throw std::invalid_argument("performance_alpha: lambda1 must be positive");
  if (R.rows() != w_ra.size() || pair.size() != w_ra.size())
    throw std::invalid_argument("performance_alpha: size mismatch");
  const double n = static_cast<double>(w_ra.size());
  return w_ra.dot(R * w_ra).real() / (n * pair.lambda1);
}

double performance_alpha(const CMatrix& R, const spectral::Spectrum& spec,
                         const CVector& w_ra) {
  return performance_alpha(R, spec.leading(), w_ra);
}

double alignment_beta(const spectral::LeadingPair& pair) {
  if (pair.size() == 0)
    throw std::invalid_argument("alignment_beta: empty spectrum");
  return pair.amplitudes.sum() / std::sqrt(static_cast<double>(pair.size()));
}

double alignment_beta(const spectral::Spectrum& spec) {
  return alignment_beta(spec.leading());
}

SolverOutcome outcome(const solvers::PhaseSolution& sol, double sigma2) {
  SolverOutcome o;
  o.objective = sol.objective;
  // Round-off can leave a null objective marginally negative.
  o.snr = snr(std::max(sol.objective, 0.0), sigma2);
  o.wall_time = sol.wall_time.count();
  o.iterations = sol.iterations;
  return o;
}

double ratio_ra_mo(std::span<const TrialRecord> records) {
  if (records.empty())
    throw std::invalid_argument("ratio_ra_mo: no records");
  const TrialRecord& first = records.front();
  double sum = 0.0;
  for (const TrialRecord& r : records) {
    if (!r.ra || !r.mo)
      throw std::invalid_argument("ratio_ra_mo: record lacks an RA or MO outcome");
    if (r.N != first.N || r.n_t != first.n_t || r.K1 != first.K1 || r.K2 != first.K2)
      throw std::invalid_argument("ratio_ra_mo: records come from different configurations");
    sum += r.ra->objective / r.mo->objective;
  }
  return sum / static_cast<double>(records.size());
}

} // namespace torus_beam::metrics
