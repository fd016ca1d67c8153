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

#include "torus_beam/channel.hpp"

#include "torus_beam/errors.hpp"
#include "torus_beam/rng.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace torus_beam::channel {

namespace {

// Mixing weights (LoS, scattered) for a Rician factor.
std::pair<double, double> rician_weights(double K) {
  if (std::isinf(K))
    return {1.0, 0.0};
  return {std::sqrt(K / (K + 1.0)), std::sqrt(1.0 / (K + 1.0))};
}

bool all_finite(const CMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        return false;
  return true;
}

} // namespace

void RicianConfig::validate() const {
  std::ostringstream err;
  if (n_t < 1)
    err << "n_t must be >= 1 (got " << n_t << "); ";
  if (N < 1)
    err << "N must be >= 1 (got " << N << "); ";
  if (!(K1 >= 0.0))
    err << "K1 must be >= 0 (got " << K1 << "); ";
  if (!(K2 >= 0.0))
    err << "K2 must be >= 0 (got " << K2 << "); ";
  if (!(sigma2 > 0.0) || std::isinf(sigma2))
    err << "sigma2 must be positive and finite (got " << sigma2 << "); ";
  const std::string msg = err.str();
  if (!msg.empty())
    throw std::invalid_argument("RicianConfig: " + msg.substr(0, msg.size() - 2));
}

CVector steering_vector(int length, double angle) {
  CVector a(length);
  const double step = std::numbers::pi * std::sin(angle);
  for (int k = 0; k < length; ++k)
    a(k) = std::polar(1.0, step * k);
  return a;
}

LoSComponents make_los(int n_t, int N, double angle_tx, double angle_ris,
                       std::optional<double> angle_user) {
  if (n_t < 1 || N < 1)
    throw std::invalid_argument("make_los: n_t and N must be >= 1");
  const CVector a_t = steering_vector(n_t, angle_tx);
  const CVector a_r = steering_vector(N, angle_ris);
  LoSComponents los;
  los.M1 = (a_r * a_t.adjoint()) / std::sqrt(static_cast<double>(N));
  los.m2 = steering_vector(N, angle_user.value_or(angle_ris));
  return los;
}

ChannelRealization sample_channel(const RicianConfig& cfg,
                                  const LoSComponents& los) {
  cfg.validate();
  if (los.M1.rows() != cfg.N || los.M1.cols() != cfg.n_t || los.m2.size() != cfg.N)
    throw std::invalid_argument("sample_channel: LoS dimensions do not match config");

  GaussianStream stream(cfg.seed);
  const auto [los1, nlos1] = rician_weights(cfg.K1);
  const auto [los2, nlos2] = rician_weights(cfg.K2);

  ChannelRealization ch;
  ch.cfg = cfg;
  ch.los = los;
  ch.H1.resize(cfg.N, cfg.n_t);
  // The draws are taken even when a weight is zero so that the stream
  // position of h2 is independent of K1.
  for (int i = 0; i < cfg.N; ++i)
    for (int j = 0; j < cfg.n_t; ++j) {
      const Complex g = stream.complex_normal();
      ch.H1(i, j) = nlos1 == 0.0 ? los.M1(i, j) : los1 * los.M1(i, j) + nlos1 * g;
    }
  ch.h2.resize(cfg.N);
  for (int i = 0; i < cfg.N; ++i) {
    const Complex g = stream.complex_normal();
    ch.h2(i) = nlos2 == 0.0 ? los.m2(i) : los2 * los.m2(i) + nlos2 * g;
  }
  return ch;
}

namespace {

CMatrix gram_hermitian(const CMatrix& Phi) {
  const Eigen::Index n = Phi.rows();
  CMatrix R = CMatrix::Zero(n, n);
  R.selfadjointView<Eigen::Lower>().rankUpdate(Phi);
  for (Eigen::Index j = 0; j < n; ++j) {
    R(j, j) = Complex(R(j, j).real(), 0.0);
    for (Eigen::Index i = j + 1; i < n; ++i)
      R(j, i) = std::conj(R(i, j));
  }
  return R;
}

} // namespace

ProblemInstance assemble(const ChannelRealization& ch) {
  if (ch.H1.rows() != ch.h2.size())
    throw std::invalid_argument("assemble: H1 rows must equal h2 length");
  if (!all_finite(ch.H1) || !all_finite(ch.h2))
    throw std::invalid_argument("assemble: channel contains non-finite entries");
  ProblemInstance inst;
  inst.Phi = ch.h2.asDiagonal() * ch.H1;
  inst.R = gram_hermitian(inst.Phi);
  return inst;
}

ProblemInstance from_matrix(const CMatrix& R) {
  if (R.rows() != R.cols() || R.rows() == 0)
    throw std::invalid_argument("from_matrix: R must be square and non-empty");
  if (!all_finite(R))
    throw std::invalid_argument("from_matrix: R contains non-finite entries");
  const double scale = R.cwiseAbs().maxCoeff();
  const double asym = (R - R.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-10 * scale) {
    std::ostringstream msg;
    msg << "from_matrix: R is not Hermitian (max |R - R^H| = " << asym
        << ", max |R| = " << scale << ")";
    throw NonHermitianError(msg.str());
  }
  ProblemInstance inst;
  inst.R = (R + R.adjoint()) / 2.0;
  for (Eigen::Index j = 0; j < R.rows(); ++j)
    inst.R(j, j) = Complex(inst.R(j, j).real(), 0.0);
  return inst;
}

} // namespace torus_beam::channel
