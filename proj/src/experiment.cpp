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

#include "torus_beam/experiment.hpp"

#include "torus_beam/channel.hpp"
#include "torus_beam/rng.hpp"
#include "torus_beam/solvers.hpp"
#include "torus_beam/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace torus_beam::experiment {

namespace {

bool runs_solvers(ExperimentKind kind) { return kind != ExperimentKind::SPIKE; }

struct MetricSpec {
  std::string name; // "<solver>_<metric>"
  std::function<std::optional<double>(const metrics::TrialRecord&)> get;
};

std::optional<double> field(const std::optional<metrics::SolverOutcome>& o,
                            double metrics::SolverOutcome::*member) {
  if (!o)
    return std::nullopt;
  return (*o).*member;
}

std::vector<MetricSpec> solver_metrics(std::string_view tag,
                                       std::optional<metrics::SolverOutcome> metrics::TrialRecord::*slot) {
  const std::string p(tag);
  return {
      {p + "_objective", [slot](const auto& r) { return field(r.*slot, &metrics::SolverOutcome::objective); }},
      {p + "_snr", [slot](const auto& r) { return field(r.*slot, &metrics::SolverOutcome::snr); }},
      {p + "_time", [slot](const auto& r) { return field(r.*slot, &metrics::SolverOutcome::wall_time); }},
      {p + "_iterations",
       [slot](const auto& r) -> std::optional<double> {
         if (!(r.*slot))
           return std::nullopt;
         return static_cast<double>((r.*slot)->iterations);
       }},
  };
}

std::vector<MetricSpec> metric_specs(ExperimentKind kind) {
  using metrics::TrialRecord;
  std::vector<MetricSpec> specs;
  if (runs_solvers(kind)) {
    for (auto& m : solver_metrics("ra", &TrialRecord::ra))
      specs.push_back(std::move(m));
    specs.push_back({"ra_alpha", [](const TrialRecord& r) { return r.alpha; }});
    specs.push_back({"ra_beta", [](const TrialRecord& r) { return r.beta; }});
    for (auto& m : solver_metrics("mo", &TrialRecord::mo))
      specs.push_back(std::move(m));
    if (kind == ExperimentKind::ORACLE)
      for (auto& m : solver_metrics("brute", &TrialRecord::brute))
        specs.push_back(std::move(m));
    specs.push_back({"ramo_ratio", [](const TrialRecord& r) -> std::optional<double> {
                       if (!r.ra || !r.mo)
                         return std::nullopt;
                       return r.ra->objective / r.mo->objective;
                     }});
  }
  specs.push_back({"spectrum_lambda1", [](const TrialRecord& r) -> std::optional<double> {
                     return r.lambda1_scaled;
                   }});
  return specs;
}

} // namespace

std::vector<SweepPoint> sweep_points(const ExperimentConfig& cfg) {
  std::vector<SweepPoint> points;
  for (int n : cfg.N)
    for (int nt : cfg.n_t)
      for (double k1 : cfg.K1)
        for (double k2 : cfg.K2)
          points.push_back({n, nt, k1, k2});
  return points;
}

std::uint64_t trial_seed(std::uint64_t base, const SweepPoint& point, int trial) {
  std::uint64_t h = mix64(static_cast<std::uint64_t>(point.N));
  h = mix64(h ^ static_cast<std::uint64_t>(point.n_t));
  h = mix64(h ^ static_cast<std::uint64_t>(trial));
  return base ^ h;
}

const std::vector<std::string>& leading_columns() {
  static const std::vector<std::string> cols = {"experiment", "N", "n_t", "K1", "K2", "trials"};
  return cols;
}

std::vector<std::string> metric_columns(ExperimentKind kind) {
  std::vector<std::string> cols;
  for (const MetricSpec& m : metric_specs(kind)) {
    cols.push_back(m.name + "_mean");
    cols.push_back(m.name + "_std");
  }
  if (kind == ExperimentKind::SPIKE) {
    cols.push_back("theory_spike_value");
    cols.push_back("theory_edge_value");
  }
  return cols;
}

double ResultTable::value(std::size_t row, std::string_view column) const {
  const auto it = std::find(metric_columns.begin(), metric_columns.end(), column);
  if (it == metric_columns.end())
    throw std::out_of_range("no column named '" + std::string(column) + "'");
  return rows.at(row).values.at(static_cast<std::size_t>(it - metric_columns.begin()));
}

std::vector<metrics::TrialRecord> run_point(const ExperimentConfig& cfg,
                                            const SweepPoint& point) {
  const channel::LoSComponents los =
      channel::make_los(point.n_t, point.N, cfg.angle_tx, cfg.angle_ris, cfg.angle_user);

  std::vector<metrics::TrialRecord> records;
  records.reserve(cfg.trials);
  for (int t = 0; t < cfg.trials; ++t) {
    channel::RicianConfig rc;
    rc.n_t = point.n_t;
    rc.N = point.N;
    rc.K1 = point.K1;
    rc.K2 = point.K2;
    rc.sigma2 = cfg.sigma2;
    rc.seed = trial_seed(cfg.seed, point, t);

    const channel::ChannelRealization ch = channel::sample_channel(rc, los);
    const channel::ProblemInstance inst = channel::assemble(ch);

    metrics::TrialRecord rec;
    rec.N = point.N;
    rec.n_t = point.n_t;
    rec.K1 = point.K1;
    rec.K2 = point.K2;
    rec.seed = rc.seed;

    if (cfg.experiment == ExperimentKind::SPIKE) {
      const RVector ev = spectral::eigenvalues_hermitian(inst.R);
      rec.lambda1_scaled = ev(0) / point.N;
      records.push_back(std::move(rec));
      continue;
    }

    const solvers::PhaseSolution ra = solvers::solve_ra(inst);
    const solvers::PhaseSolution mo = solvers::solve_mo(inst, cfg.mo, rc.seed);
    rec.ra = metrics::outcome(ra, cfg.sigma2);
    rec.mo = metrics::outcome(mo, cfg.sigma2);
    if (cfg.experiment == ExperimentKind::ORACLE)
      rec.brute = metrics::outcome(solvers::brute_force(inst, cfg.brute_levels), cfg.sigma2);

    const spectral::LeadingPair pair = spectral::leading_eigenpair(inst.R);
    rec.lambda1_scaled = pair.lambda1 / point.N;
    if (pair.lambda1 > 0.0)
      rec.alpha = metrics::performance_alpha(inst.R, pair, ra.w);
    rec.beta = metrics::alignment_beta(pair);
    records.push_back(std::move(rec));
  }
  return records;
}

ResultRow aggregate(ExperimentKind kind, const SweepPoint& point,
                    std::span<const metrics::TrialRecord> records) {
  ResultRow row;
  row.experiment = std::string(to_string(kind));
  row.point = point;
  row.trials = static_cast<int>(records.size());
  for (const MetricSpec& m : metric_specs(kind)) {
    std::vector<double> xs;
    xs.reserve(records.size());
    for (const auto& r : records)
      if (const auto v = m.get(r))
        xs.push_back(*v);
    double mean = NAN, sd = NAN;
    if (!xs.empty()) {
      double sum = 0.0;
      for (double x : xs)
        sum += x;
      mean = sum / static_cast<double>(xs.size());
      double ss = 0.0;
      for (double x : xs)
        ss += (x - mean) * (x - mean);
      sd = xs.size() > 1 ? std::sqrt(ss / static_cast<double>(xs.size() - 1)) : 0.0;
    }
    row.values.push_back(mean);
    row.values.push_back(sd);
  }
  if (kind == ExperimentKind::SPIKE) {
    const double c = static_cast<double>(point.N) / point.n_t;
    row.values.push_back(spectral::spike_prediction(point.K1, c));
    row.values.push_back(spectral::bulk_right_edge(point.K1, c));
  }
  return row;
}

ResultTable run(const ExperimentConfig& cfg) {
  cfg.validate();
  ResultTable table;
  table.experiment = std::string(to_string(cfg.experiment));
  table.metric_columns = metric_columns(cfg.experiment);
  for (const SweepPoint& point : sweep_points(cfg)) {
    const auto records = run_point(cfg, point);
    table.rows.push_back(aggregate(cfg.experiment, point, records));
  }
  return table;
}

} // namespace torus_beam::experiment
