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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits with
// the number of failed criteria. Optional arguments select criteria by
// number, e.g. `acceptance 1 7 8`.

#include "torus_beam/channel.hpp"
#include "torus_beam/experiment.hpp"
#include "torus_beam/metrics.hpp"
#include "torus_beam/solvers.hpp"
#include "torus_beam/spectral.hpp"
#include "torus_beam/table_io.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace torus_beam;
using experiment::ExperimentConfig;
using experiment::ExperimentKind;
using experiment::SweepPoint;
using metrics::TrialRecord;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char *f, double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

std::vector<TrialRecord> records(ExperimentKind kind, const SweepPoint &p, int trials)
{
    auto cfg = ExperimentConfig::defaults(kind);
    cfg.trials = trials;
    return experiment::run_point(cfg, p);
}

double mean_of(const std::vector<TrialRecord> &recs, const std::function<double(const TrialRecord &)> &f)
{
    double s = 0.0;
    for (const auto &r : recs)
        s += f(r);
    return s / double(recs.size());
}

channel::ProblemInstance instance(int n_t, int N, double K1, double K2, std::uint64_t seed)
{
    channel::RicianConfig c;
    c.n_t = n_t;
    c.N = N;
    c.K1 = K1;
    c.K2 = K2;
    c.seed = seed;
    return channel::assemble(channel::sample_channel(c, channel::make_los(n_t, N, 0.3, 0.7)));
}

// 1. Rank one: RA equals MO on every trial.
Verdict rank_one()
{
    Verdict v;
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (int N : {50, 100, 200, 500})
        for (const auto &r : records(ExperimentKind::SNR_VS_N, {N, 1, 0.0, 0.0}, 50))
        {
            const double rel = std::abs(r.ra->objective - r.mo->objective) / r.mo->objective;
            worst = std::max(worst, rel);
            if (!(rel <= 1e-6))
                v.pass = false;
        }
    const double dt = seconds_since(t0);
    if (!(dt < 60.0))
        v.pass = false;
    v.detail = "max |RA-MO|/MO = " + fmt("%.3g", worst) + " (tol 1e-6), runtime " + fmt("%.1f", dt) + " s (limit 60)";
    return v;
}

// 2. High rank, Rayleigh hops: mean RA/MO >= 0.965 for each n_t.
Verdict high_rank()
{
    Verdict v;
    const auto t0 = Clock::now();
    for (int n_t : {4, 8, 16})
    {
        const double ratio = metrics::ratio_ra_mo(records(ExperimentKind::SNR_VS_N, {500, n_t, 0.0, 0.0}, 100));
        if (!(ratio >= 0.965))
            v.pass = false;
        v.detail += "n_t=" + std::to_string(n_t) + ": " + fmt("%.4f", ratio) + "  ";
    }
    const double dt = seconds_since(t0);
    if (!(dt < 600.0))
        v.pass = false;
    v.detail += "(need >= 0.965), runtime " + fmt("%.1f", dt) + " s (limit 600)";
    return v;
}

// 3. Ratio non-decreasing in K1 and >= 0.99 at K1 = 50.
Verdict k1_trend()
{
    Verdict v;
    const auto t0 = Clock::now();
    std::vector<double> ratios;
    for (double K1 : {0.0, 1.0, 10.0, 50.0})
    {
        ratios.push_back(metrics::ratio_ra_mo(records(ExperimentKind::RATIO_VS_K1, {200, 16, K1, 0.0}, 100)));
        v.detail += "K1=" + fmt("%g", K1) + ": " + fmt("%.4f", ratios.back()) + "  ";
    }
    for (size_t i = 1; i < ratios.size(); ++i)
        if (!(ratios[i] >= ratios[i - 1]))
            v.pass = false;
    if (!(ratios.back() >= 0.99))
        v.pass = false;
    const double dt = seconds_since(t0);
    if (!(dt < 300.0))
        v.pass = false;
    v.detail += "(non-decreasing, last >= 0.99), runtime " + fmt("%.1f", dt) + " s (limit 300)";
    return v;
}

// 4. Ratio non-increasing in n_t, total decline <= 5 percentage points.
Verdict nt_trend()
{
    Verdict v;
    std::vector<double> ratios;
    for (int n_t : {2, 4, 8, 16, 32})
    {
        ratios.push_back(metrics::ratio_ra_mo(records(ExperimentKind::RATIO_VS_NT, {200, n_t, 1.0, 0.0}, 100)));
        v.detail += "n_t=" + std::to_string(n_t) + ": " + fmt("%.4f", ratios.back()) + "  ";
    }
    for (size_t i = 1; i < ratios.size(); ++i)
        if (!(ratios[i] <= ratios[i - 1]))
            v.pass = false;
    const double decline = ratios.front() - ratios.back();
    if (!(decline <= 0.05))
        v.pass = false;
    v.detail += "(non-increasing), decline " + fmt("%.2f", 100.0 * decline) + " pp (limit 5)";
    return v;
}

// 5. RA time <= 5% of MO time; RA time independent of n_t.
Verdict timing()
{
    Verdict v;
    auto r16 = records(ExperimentKind::TIME_VS_N, {500, 16, 0.0, 0.0}, 20);
    auto r1 = records(ExperimentKind::TIME_VS_N, {500, 1, 0.0, 0.0}, 20);
    const double ra16 = mean_of(r16, [](const TrialRecord &r) { return r.ra->wall_time; });
    const double mo16 = mean_of(r16, [](const TrialRecord &r) { return r.mo->wall_time; });
    const double ra1 = mean_of(r1, [](const TrialRecord &r) { return r.ra->wall_time; });
    const double share = ra16 / mo16, across = ra16 / ra1;
    v.pass = share <= 0.05 && across >= 0.5 && across <= 2.0;
    v.detail = "RA/MO time = " + fmt("%.4f", share) + " (limit 0.05; RA " + fmt("%.2f", 1e3 * ra16) + " ms, MO " +
               fmt("%.1f", 1e3 * mo16) + " ms), RA time n_t=16 / n_t=1 = " + fmt("%.3f", across) + " (need [0.5, 2])";
    return v;
}

// 6. Spike location on both sides of the transition.
Verdict spike()
{
    Verdict v;
    const auto t0 = Clock::now();
    const double c = 1000.0 / 500.0;
    const double pred_a = spectral::spike_prediction(3.0, c);
    const double pred_b = spectral::bulk_right_edge(0.5, c);
    auto lam = [](const TrialRecord &r) { return r.lambda1_scaled; };
    const double a = mean_of(records(ExperimentKind::SPIKE, {1000, 500, 3.0, 1e6}, 10), lam);
    const double b = mean_of(records(ExperimentKind::SPIKE, {1000, 500, 0.5, 1e6}, 10), lam);
    const double ea = std::abs(a - pred_a) / pred_a, eb = std::abs(b - pred_b) / pred_b;
    const double dt = seconds_since(t0);
    v.pass = ea <= 0.05 && eb <= 0.05 && dt < 300.0;
    v.detail = "(a) K1=3: " + fmt("%.4f", a) + " vs " + fmt("%.4f", pred_a) + " (" + fmt("%.2f", 100 * ea) +
               "%), (b) K1=0.5: " + fmt("%.4f", b) + " vs " + fmt("%.4f", pred_b) + " (" + fmt("%.2f", 100 * eb) +
               "%), limit 5%, runtime " + fmt("%.1f", dt) + " s (limit 300)";
    return v;
}

// 7. Exhaustive search never beats MO; RA dominates it on rank one.
Verdict oracle_ordering()
{
    Verdict v;
    int trials = 0, bad = 0;
    double worst = -1e300;
    for (int n_t : {1, 3, 6})
    {
        auto cfg = ExperimentConfig::defaults(ExperimentKind::ORACLE);
        cfg.trials = 20;
        cfg.brute_levels = 32;
        for (const auto &r : experiment::run_point(cfg, {6, n_t, 0.0, 0.0}))
        {
            ++trials;
            const double nl1 = 6.0 * (6.0 * r.lambda1_scaled);
            const double gap = (r.brute->objective - r.mo->objective) / nl1;
            worst = std::max(worst, gap);
            bool ok = r.brute->objective <= r.mo->objective + 1e-9 * nl1;
            if (n_t == 1)
                ok = ok && r.ra->objective >= r.brute->objective;
            if (!ok)
                ++bad;
        }
    }
    v.pass = bad == 0 && trials == 60;
    v.detail = std::to_string(trials) + " trials, " + std::to_string(bad) +
               " violations, max (brute-MO)/(N lambda1) = " + fmt("%.3g", worst) + " (tol 1e-9)";
    return v;
}

// 8. Property suite.
Verdict properties()
{
    Verdict v;
    std::vector<std::string> failed;
    std::mt19937_64 gen(20260101ull);
    std::uniform_real_distribution<double> ud(0.0, 2.0 * std::numbers::pi);

    double phase_err = 0.0, cos_err = 0.0, bound_excess = -1.0, ab_err = 0.0, recon = 0.0;
    for (int k = 0; k < 50; ++k)
    {
        const int n_t = 1 + k % 8, N = 6 + (k * 7) % 60;
        auto inst = instance(n_t, N, 0.5 * (k % 3), 1.0 * (k % 4), 7000 + k);
        const double l1 = spectral::eigenvalues_hermitian(inst.R)(0);

        RVector theta(N);
        for (int i = 0; i < N; ++i)
            theta(i) = ud(gen);
        const double f = solvers::evaluate(inst.R, theta);
        cos_err = std::max(cos_err, std::abs(solvers::evaluate_cosine_form(inst.R, theta) - f) / f);

        std::vector<solvers::PhaseSolution> sols{solvers::solve_ra(inst), solvers::solve_mo(inst, {}, k)};
        if (N <= 6)
            sols.push_back(solvers::brute_force(inst, 16));
        for (const auto &s : sols)
        {
            bound_excess = std::max(bound_excess, s.objective / (N * l1) - 1.0);
            for (double d : {0.1, 1.0, std::numbers::pi})
            {
                RVector shifted = s.theta.array() + d;
                phase_err = std::max(phase_err, std::abs(solvers::evaluate(inst.R, shifted) - s.objective) / s.objective);
            }
        }

        auto spec = spectral::eig_hermitian(inst.R);
        CMatrix rec = spec.eigenvectors * spec.eigenvalues.cast<Complex>().asDiagonal() * spec.eigenvectors.adjoint();
        recon = std::max(recon, (inst.R - rec).cwiseAbs().maxCoeff() / spec.eigenvalues(0));

        auto r1 = instance(1, N, 0.5 * (k % 3), 1.0 * (k % 4), 9000 + k);
        auto s1 = spectral::eig_hermitian(r1.R);
        auto ra1 = solvers::solve_ra(s1, r1.R);
        const double beta = metrics::alignment_beta(s1);
        ab_err = std::max(ab_err, std::abs(metrics::performance_alpha(r1.R, s1, ra1.w) - beta * beta));
    }
    if (!(phase_err <= 1e-10))
        failed.push_back("phase invariance");
    if (!(cos_err <= 1e-9))
        failed.push_back("cosine form");
    if (!(bound_excess <= 0.0))
        failed.push_back("N lambda1 bound");
    if (!(ab_err <= 1e-9))
        failed.push_back("alpha = beta^2");
    if (!(recon <= 1e-8))
        failed.push_back("reconstruction");

    // byte-identical CSV re-emission, also after a parse round trip
    auto cfg = ExperimentConfig::defaults(ExperimentKind::RATIO_VS_K1);
    cfg.N = {40};
    cfg.n_t = {4};
    cfg.trials = 3;
    const auto table = experiment::run(cfg);
    const std::string p1 = "acceptance_emit_1.csv", p2 = "acceptance_emit_2.csv";
    experiment::emit(table, p1, experiment::OutputFormat::CSV);
    experiment::emit(table, p2, experiment::OutputFormat::CSV);
    auto slurp = [](const std::string &p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    };
    const std::string a = slurp(p1), b = slurp(p2);
    const bool bytes_ok = !a.empty() && a == b && experiment::to_csv(experiment::parse_csv(a)) == a;
    std::remove(p1.c_str());
    std::remove(p2.c_str());
    if (!bytes_ok)
        failed.push_back("CSV re-emission");

    v.pass = failed.empty();
    v.detail = "phase " + fmt("%.2g", phase_err) + " (1e-10), cosine " + fmt("%.2g", cos_err) + " (1e-9), bound excess " +
               fmt("%.2g", bound_excess) + " (<= 0), |alpha-beta^2| " + fmt("%.2g", ab_err) + " (1e-9), residual " +
               fmt("%.2g", recon) + " (1e-8), CSV " + (bytes_ok ? "identical" : "differs");
    for (const auto &f : failed)
        v.detail += "; failed: " + f;
    return v;
}

} // namespace

int main(int argc, char **argv)
{
    const std::vector<std::pair<const char *, Verdict (*)()>> criteria = {
        {"rank-one exactness", rank_one},
        {"high-rank near-optimality", high_rank},
        {"K1 trend", k1_trend},
        {"n_t trend", nt_trend},
        {"timing", timing},
        {"spike location", spike},
        {"oracle ordering", oracle_ordering},
        {"property suite", properties},
    };
    std::set<int> selected;
    for (int i = 1; i < argc; ++i)
        selected.insert(std::atoi(argv[i]));

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i)
    {
        const int id = int(i) + 1;
        if (!selected.empty() && !selected.count(id))
            continue;
        const auto t0 = Clock::now();
        Verdict v;
        try
        {
            v = criteria[i].second();
        }
        catch (const std::exception &e)
        {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        if (!v.pass)
            ++failures;
        std::printf("%s criterion %d (%s): %s [%.1f s]\n", v.pass ? "PASS" : "FAIL", id, criteria[i].first,
                    v.detail.c_str(), seconds_since(t0));
        std::fflush(stdout);
    }
    return failures;
}
