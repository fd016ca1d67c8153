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

#include "torus_beam/solvers.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace torus_beam::experiment {

enum class ExperimentKind { SNR_VS_N, TIME_VS_N, RATIO_VS_K1, RATIO_VS_NT, SPIKE, ORACLE };

enum class OutputFormat { CSV, JSON };

/// CLI name of an experiment: snr, time, ratio-k1, ratio-nt, spike, oracle.
std::string_view to_string(ExperimentKind kind);
/// Accepts CLI names and enum spellings (SNR_VS_N, ...), case-insensitive.
ExperimentKind parse_experiment(std::string_view name);

std::string_view to_string(OutputFormat format);
OutputFormat parse_format(std::string_view name);

inline constexpr int kOracleMaxN = 8;
/// MO restarts used by the oracle experiment by default.
inline constexpr int kOracleMoRestarts = 16;

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::SNR_VS_N;
  std::vector<int> N;
  std::vector<int> n_t;
  std::vector<double> K1;
  std::vector<double> K2;
  int trials = 100;
  double sigma2 = 1.0;
  std::uint64_t seed = 1;
  int brute_levels = 32;
  double angle_tx = 0.3;  ///< BS-side LoS angle [rad]
  double angle_ris = 0.7; ///< RIS-side LoS angle of M1 [rad]
  std::optional<double> angle_user; ///< LoS angle of m2, defaults to angle_ris
  solvers::MOConfig mo;
  std::string output_path = "-";
  OutputFormat output_format = OutputFormat::CSV;

  /// Desk-scale defaults for an experiment.
  static ExperimentConfig defaults(ExperimentKind kind);

  /// Assigns one field from its textual form. Lists are comma separated.
  /// Throws std::invalid_argument for unknown keys or malformed values.
  void set(std::string_view key, std::string_view value);

  /// Throws std::invalid_argument, or BudgetError for an oversized oracle grid.
  void validate() const;
};

/// Recognized keys, in documentation order.
const std::vector<std::string_view>& config_keys();

/// Applies `key = value` lines; '#' starts a comment. `origin` prefixes
/// error messages.
void apply_config_text(ExperimentConfig& cfg, std::string_view text,
                       std::string_view origin = "<config>");

/// Reads and applies a config file. Throws IoError if it cannot be read.
void apply_config_file(ExperimentConfig& cfg, const std::string& path);

} // namespace torus_beam::experiment
