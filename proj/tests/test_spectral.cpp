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

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "torus_beam/channel.hpp"
#include "torus_beam/errors.hpp"
#include "torus_beam/spectral.hpp"

#include <cmath>
#include <limits>

// Covered tests:
// - Dense eigendecomposition: ordering, orthonormality, reconstruction, canonical phase
// - Eigenvalues against characteristic-polynomial roots (N <= 4)
// - Krylov leading eigenpair against the dense solver
// - Spike and bulk-edge predictions
// - Empirical spectral distribution, including the spiked ensemble

using namespace torus_beam;
using namespace torus_beam::spectral;
using Catch::Approx;

static const Complex J(0.0, 1.0);

static void check_spectrum_invariants(const CMatrix &R, const Spectrum &s)
{
    const int n = s.size();
    const double l1 = s.eigenvalues(0);
    for (int i = 1; i < n; ++i)
        CHECK(s.eigenvalues(i) <= s.eigenvalues(i - 1));
    CHECK(s.eigenvalues(n - 1) >= -1e-9 * l1);

    CMatrix gram = s.eigenvectors.adjoint() * s.eigenvectors;
    CHECK(oracle::max_abs(gram - CMatrix::Identity(n, n)) <= 1e-8);

    CMatrix rec = CMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        rec += s.eigenvalues(i) * s.eigenvectors.col(i) * s.eigenvectors.col(i).adjoint();
    CHECK(oracle::max_abs(R - rec) <= 1e-8 * l1);

    CHECK(std::abs(s.amplitudes1.squaredNorm() - 1.0) <= 1e-9);

    // canonical phase: largest-magnitude entry real and nonnegative
    for (int j = 0; j < n; ++j)
    {
        Eigen::Index k;
        s.eigenvectors.col(j).cwiseAbs().maxCoeff(&k);
        CHECK(s.eigenvectors(k, j).real() >= 0.0);
        CHECK(std::abs(s.eigenvectors(k, j).imag()) <= 1e-15);
    }
    for (int i = 0; i < n; ++i)
    {
        CHECK(s.phases1(i) >= 0.0);
        CHECK(s.phases1(i) < kTwoPi);
        CHECK(std::abs(s.amplitudes1(i) - std::abs(s.eigenvectors(i, 0))) <= 1e-15);
    }
}

TEST_CASE("Spectral - Identity and 2x2 examples")
{
    auto s = eig_hermitian(CMatrix::Identity(3, 3));
    CHECK(s.eigenvalues(0) == Approx(1.0).margin(1e-14));
    CHECK(s.eigenvalues(1) == Approx(1.0).margin(1e-14));
    CHECK(s.eigenvalues(2) == Approx(1.0).margin(1e-14));
    check_spectrum_invariants(CMatrix::Identity(3, 3), s);
    CHECK(s.leading().degenerate);

    CMatrix R(2, 2);
    R << 1.0, -J, J, 1.0;
    s = eig_hermitian(R);
    CHECK(s.eigenvalues(0) == Approx(2.0).margin(1e-14));
    CHECK(std::abs(s.eigenvalues(1)) <= 1e-14);
    CHECK(s.amplitudes1(0) == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(s.amplitudes1(1) == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    // v1 = (1, j)/sqrt(2) up to phase: v1_2 / v1_1 = j
    CHECK(std::abs(s.eigenvectors(1, 0) / s.eigenvectors(0, 0) - J) <= 1e-14);
    // near-tie in magnitude resolves to the first entry
    CHECK(s.phases1(0) == 0.0);
    CHECK(s.phases1(1) == Approx(std::numbers::pi / 2).epsilon(1e-14));
    CHECK_FALSE(s.leading().degenerate);
    check_spectrum_invariants(R, s);
}

TEST_CASE("Spectral - Random PSD invariants")
{
    for (int n : {1, 2, 7, 40})
        for (int rank : {1, 3, 40})
            for (std::uint64_t seed = 1; seed <= 3; ++seed)
            {
                CMatrix R = oracle::random_psd(n, std::min(rank, n), seed * 100 + n);
                auto s = eig_hermitian(R);
                check_spectrum_invariants(R, s);
                RVector ev = eigenvalues_hermitian(R);
                CHECK((ev - s.eigenvalues).cwiseAbs().maxCoeff() <= 1e-10 * s.eigenvalues(0));
                CHECK(numerical_rank(ev) == std::min(rank, n));
            }
}

TEST_CASE("Spectral - Characteristic polynomial oracle")
{
    for (int n = 1; n <= 4; ++n)
        for (std::uint64_t seed = 1; seed <= 10; ++seed)
        {
            CMatrix R = oracle::random_psd(n, n, seed * 7 + n);
            auto ref = oracle::char_poly_eigenvalues(R);
            auto s = eig_hermitian(R);
            for (int i = 0; i < n; ++i)
                CHECK(std::abs(s.eigenvalues(i) - ref[i]) <= 1e-7);
        }

    // a known matrix: eigenvalues 4, 2, 1 of a unitarily rotated diagonal
    CMatrix U = oracle::gaussian(3, 3, 5).householderQr().householderQ();
    RVector d(3);
    d << 4.0, 2.0, 1.0;
    CMatrix R = U * d.cast<Complex>().asDiagonal() * U.adjoint();
    R = (R + R.adjoint()) / 2.0;
    auto ref = oracle::char_poly_eigenvalues(R);
    CHECK(ref[0] == Approx(4.0).margin(1e-9));
    CHECK(ref[1] == Approx(2.0).margin(1e-9));
    CHECK(ref[2] == Approx(1.0).margin(1e-9));
    auto s = eig_hermitian(R);
    for (int i = 0; i < 3; ++i)
        CHECK(std::abs(s.eigenvalues(i) - ref[i]) <= 1e-7);
}

TEST_CASE("Spectral - Rejects non-Hermitian input")
{
    CMatrix R(2, 2);
    R << 1.0, J, J, 1.0;
    CHECK_THROWS_AS(eig_hermitian(R), NonHermitianError);
    CHECK_THROWS_AS(eigenvalues_hermitian(R), NonHermitianError);
    CHECK_THROWS_AS(leading_eigenpair(R), NonHermitianError);
    try
    {
        eig_hermitian(R);
    }
    catch (const NonHermitianError &e)
    {
        CHECK(std::string(e.what()).find("not Hermitian") != std::string::npos);
    }
    CHECK_THROWS_AS(eig_hermitian(CMatrix(2, 3)), std::invalid_argument);

    // asymmetry below the tolerance is accepted
    CMatrix near = CMatrix::Identity(2, 2);
    near(0, 1) = 1e-12;
    CHECK_NOTHROW(eig_hermitian(near));
}

TEST_CASE("Spectral - Krylov leading pair matches dense solver")
{
    for (int n : {5, 33, 120, 300})
        for (int rank : {1, 2, 16, 64, 300})
        {
            if (rank > n)
                continue;
            CMatrix R = oracle::random_psd(n, rank, 1000 + n + rank);
            R = channel::from_matrix(R).R;
            auto dense = eig_hermitian(R);
            auto p = leading_eigenpair(R);
            CHECK(p.lambda1 == Approx(dense.eigenvalues(0)).epsilon(1e-10));
            CHECK(p.size() == n);
            CHECK(std::abs(p.v1.norm() - 1.0) <= 1e-10);
            // same eigenvector up to phase
            CHECK(std::abs(dense.eigenvectors.col(0).dot(p.v1)) == Approx(1.0).epsilon(1e-8));
            CHECK((p.amplitudes - dense.amplitudes1).cwiseAbs().maxCoeff() <= 1e-7);
            CHECK(std::abs(p.amplitudes.squaredNorm() - 1.0) <= 1e-9);
            CHECK_FALSE(p.degenerate);
            if (rank > 1)
                CHECK(p.lambda2 <= p.lambda1);
        }
}

TEST_CASE("Spectral - Krylov leading pair edge cases")
{
    // repeated top eigenvalue
    auto p = leading_eigenpair(CMatrix::Identity(50, 50));
    CHECK(p.lambda1 == Approx(1.0).epsilon(1e-12));
    CHECK(p.degenerate);

    // zero matrix
    p = leading_eigenpair(CMatrix::Zero(40, 40));
    CHECK(p.lambda1 == 0.0);
    CHECK(std::abs(p.v1.norm() - 1.0) <= 1e-12);

    // excessive restarts fall back to the dense path
    CMatrix R = oracle::random_psd(80, 80, 3);
    LanczosOptions tight;
    tight.subspace = 2;
    tight.max_restarts = 0;
    auto q = leading_eigenpair(R, tight);
    CHECK(q.lambda1 == Approx(eig_hermitian(R).eigenvalues(0)).epsilon(1e-12));

    // small matrices use the dense solver directly
    CMatrix S = oracle::random_psd(6, 2, 4);
    auto a = leading_eigenpair(S);
    auto b = eig_hermitian(S).leading();
    CHECK(a.v1 == b.v1);
    CHECK(a.lambda1 == b.lambda1);
}

TEST_CASE("Spectral - Spike prediction and bulk edge")
{
    CHECK(spike_prediction(2.0, 1.0) == Approx(1.5).epsilon(1e-15));
    CHECK(spike_prediction(1.0, 4.0) == Approx(1.125).epsilon(1e-15));
    CHECK(bulk_right_edge(0.0, 1.0) == Approx(4.0).epsilon(1e-15));
    CHECK(bulk_right_edge(3.0, 1.0) == Approx(1.0).epsilon(1e-15));
    CHECK(bulk_right_edge(1.0, 4.0) == Approx(1.125).epsilon(1e-15));

    for (double c : {0.25, 1.0, 2.0, 9.0})
    {
        const double s = std::sqrt(c);
        CHECK(spike_prediction(s, c) == Approx((1.0 + s) / c).epsilon(1e-13));
        CHECK(bulk_right_edge(s, c) == Approx((1.0 + s) / c).epsilon(1e-13));
        // the K1 > sqrt(c) branch approaches the same value from above
        CHECK(spike_prediction(s * (1.0 + 1e-9), c) == Approx((1.0 + s) / c).epsilon(1e-8));
    }

    for (double c : {0.3, 1.0, 2.0, 5.0})
        for (int k = 0; k <= 1200; ++k)
        {
            const double K1 = 0.05 * k;
            const double sp = spike_prediction(K1, c), be = bulk_right_edge(K1, c);
            if (K1 <= std::sqrt(c))
                CHECK(sp == be);
            else if (K1 < std::sqrt(c) * (1.0 + 1e-9))
                CHECK(sp == Approx(be).epsilon(1e-12)); // rounding at the threshold
            else
                CHECK(sp > be);
        }

    for (double c : {0.5, 2.0, 4.0})
    {
        double prev = std::numeric_limits<double>::infinity();
        for (double K1 = std::sqrt(c) + 0.1; K1 <= 50.0; K1 += 0.1)
        {
            const double v = spike_prediction(K1, c);
            CHECK(v < prev);
            prev = v;
        }
    }

    CHECK(spike_prediction(std::numeric_limits<double>::infinity(), 2.0) == Approx(0.5));
    CHECK_THROWS_AS(spike_prediction(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(spike_prediction(-1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(bulk_right_edge(1.0, -2.0), std::invalid_argument);
    CHECK_THROWS_AS(bulk_right_edge(1.0, std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("Spectral - Empirical spectral distribution")
{
    auto s = eig_hermitian(CMatrix::Identity(3, 3));
    auto h = esd(s, 1.0, 1, false);
    REQUIRE(h.counts.size() == 1);
    CHECK(h.counts[0] == 3);
    CHECK(h.bin_edges.size() == 2);
    CHECK(h.normalized_density[0] * (h.bin_edges[1] - h.bin_edges[0]) == Approx(1.0).epsilon(1e-12));

    // rank one: structural zeros removed
    CVector v = oracle::gaussian(6, 1, 9).col(0);
    auto r1 = eig_hermitian(channel::from_matrix(v * v.adjoint()).R);
    h = esd(r1, 1.0, 4, true);
    long total = 0;
    for (long c : h.counts)
        total += c;
    CHECK(total == 1);
    h = esd(r1, 1.0, 4, false);
    total = 0;
    for (long c : h.counts)
        total += c;
    CHECK(total == 6);

    // density integrates to one, scale divides the values
    CMatrix R = oracle::random_psd(60, 30, 17);
    auto sp = eig_hermitian(R);
    for (int bins : {1, 7, 25})
    {
        h = esd(sp, 60.0, bins, true);
        double integral = 0.0;
        long cnt = 0;
        for (int b = 0; b < bins; ++b)
        {
            CHECK(h.bin_edges[b + 1] > h.bin_edges[b]);
            integral += h.normalized_density[b] * (h.bin_edges[b + 1] - h.bin_edges[b]);
            cnt += h.counts[b];
        }
        CHECK(integral == Approx(1.0).epsilon(1e-9));
        CHECK(cnt == 30);
        CHECK(h.bin_edges.back() == Approx(sp.eigenvalues(0) / 60.0).epsilon(1e-14));
    }

    CHECK_THROWS_AS(esd(sp, 1.0, 0, false), std::invalid_argument);
    CHECK_THROWS_AS(esd(sp, 0.0, 3, false), std::invalid_argument);
}

TEST_CASE("Spectral - Spiked ensemble")
{
    // N = 1000, n_t = 500 (c = 2), K1 = 3 > sqrt(2), near-LoS h2
    const int N = 1000, n_t = 500;
    auto los = channel::make_los(n_t, N, 0.3, 0.7);
    std::vector<double> tops;
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
    {
        channel::RicianConfig cfg;
        cfg.n_t = n_t;
        cfg.N = N;
        cfg.K1 = 3.0;
        cfg.K2 = 1e6;
        cfg.seed = 500 + seed;
        auto inst = channel::assemble(channel::sample_channel(cfg, los));
        auto h = esd(eigenvalues_hermitian(inst.R), double(N), 50, true);
        long total = 0;
        for (long c : h.counts)
            total += c;
        CHECK(total == n_t);
        tops.push_back(h.bin_edges.back());
    }
    const double pred = spike_prediction(3.0, 2.0);
    CHECK(pred == Approx(0.5 + 1.0 / 3.0).epsilon(1e-15));
    for (double t : tops)
        CHECK(std::abs(t - pred) <= 0.05 * pred);
    CHECK(std::abs(oracle::sample_mean(tops) - pred) <= 0.05 * pred);
}
