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

#include <cstdint>
#include <optional>

/*!
 * Rician cascaded channel BS -> RIS -> user and the quadratic form it induces.
 *
 *   H1 = sqrt(K1/(K1+1)) M1 + sqrt(1/(K1+1)) G1     (N x n_t)
 *   h2 = sqrt(K2/(K2+1)) m2 + sqrt(1/(K2+1)) g2     (N)
 *   Phi = diag(h2^T) H1,   R = Phi Phi^H
 *
 * so that the received power for RIS phases theta is w^H R w with
 * w = exp(j theta).
 */
namespace torus_beam::channel {

struct RicianConfig {
  int n_t = 1;         ///< BS antennas
  int N = 1;           ///< RIS elements
  double K1 = 0.0;     ///< Rician factor BS -> RIS, may be +inf
  double K2 = 0.0;     ///< Rician factor RIS -> user, may be +inf
  double sigma2 = 1.0; ///< receiver noise power
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

/// Deterministic line-of-sight parts. M1 is rank one with tr(M1 M1^H) = n_t,
/// every entry of m2 has unit modulus.
struct LoSComponents {
  CMatrix M1;
  CVector m2;
};

struct ChannelRealization {
  CMatrix H1;
  CVector h2;
  LoSComponents los;
  RicianConfig cfg;
};

struct ProblemInstance {
  CMatrix Phi;
  CMatrix R; ///< exactly Hermitian, real diagonal

  int size() const { return static_cast<int>(R.rows()); }
};

/// Half-wavelength ULA steering vector, entry k = exp(j pi k sin(angle)).
CVector steering_vector(int length, double angle);

/// M1 = a_r(angle_ris) a_t(angle_tx)^H / sqrt(N), m2 = a_r(angle_user).
/// angle_user defaults to angle_ris.
LoSComponents make_los(int n_t, int N, double angle_tx, double angle_ris,
                       std::optional<double> angle_user = std::nullopt);

/// Draws the Gaussian parts from GaussianStream(cfg.seed): all of G1 in
/// row-major order first, then g2. K = +inf yields the LoS part exactly.
ChannelRealization sample_channel(const RicianConfig& cfg,
                                  const LoSComponents& los);

/// Builds Phi = diag(h2^T) H1 and R = Phi Phi^H. R is formed from its lower
/// triangle and mirrored, so Hermitian symmetry holds bit for bit.
ProblemInstance assemble(const ChannelRealization& ch);

/// Wraps an externally supplied quadratic form. R must be square and
/// Hermitian to 1e-10 relative; it is symmetrized on the way in. Phi is left
/// empty.
ProblemInstance from_matrix(const CMatrix& R);

} // namespace torus_beam::channel
