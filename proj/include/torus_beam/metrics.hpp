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
#include "torus_beam/solvers.hpp"
#include "torus_beam/spectral.hpp"

#include <cstdint>
#include <optional>
#include <span>

namespace torus_beam::metrics {

/// objective / sigma2.
double snr(double objective, double sigma2);

/// Received power |h2^T Theta H1|^2 straight from the channel, with the RIS
/// phase matrix Theta = diag(conj(w)), w = exp(j theta). This is the
/// physical counterpart of w^H R w.
double received_power(const channel::ChannelRealization& ch, const RVector& theta);

/// received_power / sigma2, using the realization's own noise power.
double snr_direct(const channel::ChannelRealization& ch, const RVector& theta);

/// w^H R w / (N lambda1): RA relative to the Rayleigh-quotient optimum
/// sqrt(N) v1. Throws std::invalid_argument if lambda1 <= 0.
double performance_alpha(const CMatrix& R, const spectral::LeadingPair& pair,
                         const CVector& w_ra);
double performance_alpha(const CMatrix& R, const spectral::Spectrum& spec,
                         const CVector& w_ra);

/// Cosine between the RA point and v1: sum_i |v1_i| / sqrt(N).
double alignment_beta(const spectral::LeadingPair& pair);
double alignment_beta(const spectral::Spectrum& spec);

struct SolverOutcome {
  double objective = 0.0;
  double snr = 0.0;
  double wall_time = 0.0; ///< seconds
  int iterations = 0;
};

SolverOutcome outcome(const solvers::PhaseSolution& sol, double sigma2);

/// Everything measured on one channel realization.
struct TrialRecord {
  int N = 0;
  int n_t = 0;
  double K1 = 0.0;
  double K2 = 0.0;
  std::uint64_t seed = 0;
  std::optional<SolverOutcome> ra, mo, brute;
  std::optional<double> alpha, beta;
  double lambda1_scaled = 0.0; ///< top eigenvalue of R / N
};

/// Mean over records of RA objective / MO objective. Throws
/// std::invalid_argument on an empty list, a missing solver or
/// records from different configurations.
double ratio_ra_mo(std::span<const TrialRecord> records);

} // namespace torus_beam::metrics
