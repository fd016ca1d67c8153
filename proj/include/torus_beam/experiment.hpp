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

#include "torus_beam/config.hpp"
#include "torus_beam/metrics.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace torus_beam::experiment {

struct SweepPoint {
  int N = 1;
  int n_t = 1;
  double K1 = 0.0;
  double K2 = 0.0;

  bool operator==(const SweepPoint&) const = default;
};

/// Cartesian product of the sweep lists, N outermost and K2 innermost.
std::vector<SweepPoint> sweep_points(const ExperimentConfig& cfg);

/// Seed of one trial: base ^ hash(N, n_t, trial). The Rician factors are not
/// hashed, so points that differ only in K1 or K2 reuse the same Gaussian
/// draws (common random numbers across a K sweep).
std::uint64_t trial_seed(std::uint64_t base, const SweepPoint& point, int trial);

/// One row of aggregates: the sweep point, the trial count and one value per
/// metric column of the owning table.
struct ResultRow {
  std::string experiment;
  SweepPoint point;
  int trials = 0;
  std::vector<double> values;

  bool operator==(const ResultRow&) const = default;
};

struct ResultTable {
  std::string experiment;
  /// Names `<solver>_<metric>_<stat>` after the fixed leading columns.
  std::vector<std::string> metric_columns;
  std::vector<ResultRow> rows;

  /// Value of a metric column in a row. Throws std::out_of_range.
  double value(std::size_t row, std::string_view column) const;

  bool operator==(const ResultTable&) const = default;
};

/// Fixed leading columns of every table.
const std::vector<std::string>& leading_columns();

/// Metric columns an experiment produces.
std::vector<std::string> metric_columns(ExperimentKind kind);

/// Runs every trial of one sweep point and returns the per-trial records.
std::vector<metrics::TrialRecord> run_point(const ExperimentConfig& cfg,
                                            const SweepPoint& point);

/// Mean and sample standard deviation of each metric over the records.
ResultRow aggregate(ExperimentKind kind, const SweepPoint& point,
                    std::span<const metrics::TrialRecord> records);

/// Validates cfg, then runs and aggregates every sweep point in order.
/// Everything except the *_time_* columns is a pure function of cfg.
ResultTable run(const ExperimentConfig& cfg);

} // namespace torus_beam::experiment
