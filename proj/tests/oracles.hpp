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

// Reference computations for the tests. Everything here is written from
// first principles with plain loops so it shares no code path with the
// library under test.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

/// Gaussian test matrix with its own generator (independent of the library stream).
inline Eigen::MatrixXcd gaussian(int rows, int cols, std::uint64_t seed)
{
    std::mt19937_64 gen(seed * 0x9E3779B97F4A7C15ull + 12345u);
    std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
    Eigen::MatrixXcd A(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            A(i, j) = cd(nd(gen), nd(gen));
    return A;
}

/// Hermitian PSD matrix of the given rank, R = A A^H with A n x rank.
inline Eigen::MatrixXcd random_psd(int n, int rank, std::uint64_t seed)
{
    Eigen::MatrixXcd A = gaussian(n, rank, seed);
    Eigen::MatrixXcd R = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < rank; ++k)
                R(i, j) += A(i, k) * std::conj(A(j, k));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            R(j, i) = std::conj(R(i, j));
    for (int i = 0; i < n; ++i)
        R(i, i) = cd(R(i, i).real(), 0.0);
    return R;
}

inline std::vector<double> random_phases(int n, std::uint64_t seed)
{
    std::mt19937_64 gen(seed ^ 0xA5A5A5A5u);
    std::uniform_real_distribution<double> ud(0.0, 2.0 * 3.14159265358979323846);
    std::vector<double> t(n);
    for (auto &x : t)
        x = ud(gen);
    return t;
}

/// sum_ij conj(w_i) R_ij w_j, w = exp(j theta), by explicit double loop.
inline double quadratic_form(const Eigen::MatrixXcd &R, const std::vector<double> &theta)
{
    cd acc = 0.0;
    const int n = (int)theta.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            acc += std::conj(std::polar(1.0, theta[i])) * R(i, j) * std::polar(1.0, theta[j]);
    return acc.real();
}

/// Determinant by cofactor expansion along the first row.
inline cd det_laplace(const std::vector<std::vector<cd>> &A)
{
    const size_t n = A.size();
    if (n == 1)
        return A[0][0];
    cd d = 0.0;
    for (size_t c = 0; c < n; ++c)
    {
        std::vector<std::vector<cd>> minor;
        for (size_t r = 1; r < n; ++r)
        {
            std::vector<cd> row;
            for (size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(A[r][k]);
            minor.push_back(row);
        }
        d += (c % 2 == 0 ? 1.0 : -1.0) * A[0][c] * det_laplace(minor);
    }
    return d;
}

/// p(x) = det(x I - R) evaluated directly.
inline cd char_poly_at(const Eigen::MatrixXcd &R, double x)
{
    const int n = (int)R.rows();
    std::vector<std::vector<cd>> A(n, std::vector<cd>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            A[i][j] = (i == j ? cd(x) : cd(0.0)) - R(i, j);
    return det_laplace(A);
}

/// Eigenvalues of a small Hermitian R as the roots of its characteristic
/// polynomial. Coefficients come from interpolating det(xI - R) at n+1 nodes
/// (Newton form), the roots from Durand-Kerner. Result sorted descending.
inline std::vector<double> char_poly_eigenvalues(const Eigen::MatrixXcd &R)
{
    const int n = (int)R.rows();
    double scale = 0.0;
    for (int i = 0; i < n; ++i)
        scale += std::abs(R(i, i));
    scale = std::max(scale, 1.0);

    std::vector<double> x(n + 1);
    std::vector<cd> dd(n + 1);
    for (int k = 0; k <= n; ++k)
    {
        x[k] = scale * (double(k) / n - 0.5);
        dd[k] = char_poly_at(R, x[k]);
    }
    for (int lev = 1; lev <= n; ++lev)
        for (int k = n; k >= lev; --k)
            dd[k] = (dd[k] - dd[k - 1]) / (x[k] - x[k - lev]);

    // Newton form -> monomial coefficients, c[k] multiplies x^k
    std::vector<cd> c(n + 1, 0.0);
    c[0] = dd[n];
    for (int k = n - 1; k >= 0; --k)
    {
        std::vector<cd> next(n + 1, 0.0);
        for (int p = 0; p < n; ++p)
        {
            next[p + 1] += c[p];
            next[p] -= x[k] * c[p];
        }
        next[0] += dd[k];
        c = next;
    }
    for (auto &v : c)
        v /= c[n];

    auto poly = [&](cd z) {
        cd acc = 1.0;
        for (int k = n - 1; k >= 0; --k)
            acc = acc * z + c[k];
        return acc;
    };
    std::vector<cd> z(n);
    for (int k = 0; k < n; ++k)
        z[k] = scale * std::pow(cd(0.4, 0.9), k);
    for (int it = 0; it < 2000; ++it)
        for (int k = 0; k < n; ++k)
        {
            cd den = 1.0;
            for (int m = 0; m < n; ++m)
                if (m != k)
                    den *= z[k] - z[m];
            z[k] -= poly(z[k]) / den;
        }
    std::vector<double> out(n);
    for (int k = 0; k < n; ++k)
        out[k] = z[k].real();
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

inline double max_abs(const Eigen::MatrixXcd &A)
{
    double m = 0.0;
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            m = std::max(m, std::abs(A(i, j)));
    return m;
}

inline double sample_mean(const std::vector<double> &v)
{
    double s = 0.0;
    for (double x : v)
        s += x;
    return s / double(v.size());
}

inline double sample_std(const std::vector<double> &v)
{
    double m = sample_mean(v), s = 0.0;
    for (double x : v)
        s += (x - m) * (x - m);
    return std::sqrt(s / double(v.size() - 1));
}

} // namespace oracle
