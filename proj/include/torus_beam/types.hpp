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

#include <Eigen/Dense>

#include <complex>
#include <numbers>

namespace torus_beam {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Wraps an angle into [0, 2pi).
inline double wrap_phase(double angle) {
  double p = std::fmod(angle, kTwoPi);
  if (p < 0.0)
    p += kTwoPi;
  if (p >= kTwoPi)
    p -= kTwoPi;
  return p;
}

/// Unit-modulus vector exp(j*theta).
inline CVector unit_modulus(const RVector& theta) {
  CVector w(theta.size());
  for (Eigen::Index i = 0; i < theta.size(); ++i)
    w(i) = std::polar(1.0, theta(i));
  return w;
}

} // namespace torus_beam
