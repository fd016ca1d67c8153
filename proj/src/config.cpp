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

#include "torus_beam/config.hpp"

#include "torus_beam/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace torus_beam::experiment {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view value) {
  std::vector<std::string_view> items;
  std::size_t pos = 0;
  while (true) {
    const auto comma = value.find(',', pos);
    items.push_back(trim(value.substr(pos, comma == std::string_view::npos ? comma : comma - pos)));
    if (comma == std::string_view::npos)
      break;
    pos = comma + 1;
  }
  return items;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value,
                            std::string_view expected) {
  throw std::invalid_argument("invalid value '" + std::string(value) + "' for key '" +
                              std::string(key) + "': expected " + std::string(expected));
}

template <class Int> Int parse_integer(std::string_view key, std::string_view value) {
  Int out{};
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (value.empty() || ec != std::errc() || ptr != end)
    bad_value(key, value, "an integer");
  return out;
}

double parse_real(std::string_view key, std::string_view value) {
  std::string_view v = value;
  if (!v.empty() && v.front() == '+')
    v.remove_prefix(1);
  if (lower(v) == "infinity")
    return INFINITY;
  double out = 0.0;
  const auto* end = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (v.empty() || ec != std::errc() || ptr != end)
    bad_value(key, value, "a real number");
  return out;
}

template <class T, class Parse>
std::vector<T> parse_list(std::string_view key, std::string_view value, Parse parse) {
  std::vector<T> out;
  for (std::string_view item : split_list(value))
    out.push_back(parse(key, item));
  return out;
}

solvers::MOInit parse_init(std::string_view key, std::string_view value) {
  const std::string v = lower(value);
  if (v == "ra_warm" || v == "ra-warm" || v == "warm")
    return solvers::MOInit::RA_WARM;
  if (v == "random")
    return solvers::MOInit::RANDOM;
  if (v == "ones")
    return solvers::MOInit::ONES;
  bad_value(key, value, "ra_warm, random or ones");
}

} // namespace

std::string_view to_string(ExperimentKind kind) {
  switch (kind) {
  case ExperimentKind::SNR_VS_N:
    return "snr";
  case ExperimentKind::TIME_VS_N:
    return "time";
  case ExperimentKind::RATIO_VS_K1:
    return "ratio-k1";
  case ExperimentKind::RATIO_VS_NT:
    return "ratio-nt";
  case ExperimentKind::SPIKE:
    return "spike";
  case ExperimentKind::ORACLE:
    return "oracle";
  }
  return "unknown";
}

ExperimentKind parse_experiment(std::string_view name) {
  const std::string v = lower(name);
  if (v == "snr" || v == "snr_vs_n")
    return ExperimentKind::SNR_VS_N;
  if (v == "time" || v == "time_vs_n")
    return ExperimentKind::TIME_VS_N;
  if (v == "ratio-k1" || v == "ratio_vs_k1")
    return ExperimentKind::RATIO_VS_K1;
  if (v == "ratio-nt" || v == "ratio_vs_nt")
    return ExperimentKind::RATIO_VS_NT;
  if (v == "spike")
    return ExperimentKind::SPIKE;
  if (v == "oracle")
    return ExperimentKind::ORACLE;
  throw std::invalid_argument("unknown experiment '" + std::string(name) +
                              "' (expected snr, time, ratio-k1, ratio-nt, spike or oracle)");
}

std::string_view to_string(OutputFormat format) {
  return format == OutputFormat::CSV ? "csv" : "json";
}

OutputFormat parse_format(std::string_view name) {
  const std::string v = lower(name);
  if (v == "csv")
    return OutputFormat::CSV;
  if (v == "json")
    return OutputFormat::JSON;
  throw std::invalid_argument("unknown output format '" + std::string(name) +
                              "' (expected csv or json)");
}

ExperimentConfig ExperimentConfig::defaults(ExperimentKind kind) {
  ExperimentConfig c;
  c.experiment = kind;
  c.N = {50, 100, 200, 500};
  c.n_t = {1, 4, 8, 16};
  c.K1 = {0.0};
  c.K2 = {0.0};
  switch (kind) {
  case ExperimentKind::SNR_VS_N:
  case ExperimentKind::TIME_VS_N:
    break;
  case ExperimentKind::RATIO_VS_K1:
    c.N = {200};
    c.n_t = {16};
    c.K1 = {0.0, 1.0, 10.0, 50.0};
    break;
  case ExperimentKind::RATIO_VS_NT:
    c.N = {200};
    c.n_t = {2, 4, 8, 16, 32};
    c.K1 = {1.0};
    break;
  case ExperimentKind::SPIKE:
    c.N = {1000};
    c.n_t = {500};
    c.K1 = {0.5, 3.0};
    c.K2 = {1e6};
    c.trials = 10;
    break;
  case ExperimentKind::ORACLE:
    c.N = {6};
    c.n_t = {1, 3, 6};
    c.trials = 20;
    // Compared against a global grid search, so MO is globalized by restarts.
    c.mo.restarts = kOracleMoRestarts;
    break;
  }
  return c;
}

const std::vector<std::string_view>& config_keys() {
  static const std::vector<std::string_view> keys = {
      "experiment",   "N",           "n_t",           "K1",
      "K2",           "trials",      "sigma2",        "seed",
      "brute_levels", "angle_tx",    "angle_ris",     "angle_user",
      "mo_max_iters", "mo_grad_tol", "mo_armijo_beta", "mo_armijo_sigma",
      "mo_init",      "mo_restarts", "out",           "format"};
  return keys;
}

void ExperimentConfig::set(std::string_view key_in, std::string_view value_in) {
  const std::string_view key = trim(key_in);
  const std::string_view value = trim(value_in);
  if (key == "experiment") {
    experiment = parse_experiment(value);
  } else if (key == "N") {
    N = parse_list<int>(key, value, parse_integer<int>);
  } else if (key == "n_t") {
    n_t = parse_list<int>(key, value, parse_integer<int>);
  } else if (key == "K1") {
    K1 = parse_list<double>(key, value, parse_real);
  } else if (key == "K2") {
    K2 = parse_list<double>(key, value, parse_real);
  } else if (key == "trials") {
    trials = parse_integer<int>(key, value);
  } else if (key == "sigma2") {
    sigma2 = parse_real(key, value);
  } else if (key == "seed") {
    seed = parse_integer<std::uint64_t>(key, value);
  } else if (key == "brute_levels") {
    brute_levels = parse_integer<int>(key, value);
  } else if (key == "angle_tx") {
    angle_tx = parse_real(key, value);
  } else if (key == "angle_ris") {
    angle_ris = parse_real(key, value);
  } else if (key == "angle_user") {
    angle_user = parse_real(key, value);
  } else if (key == "mo_max_iters") {
    mo.max_iters = parse_integer<int>(key, value);
  } else if (key == "mo_grad_tol") {
    mo.grad_tol = parse_real(key, value);
  } else if (key == "mo_armijo_beta") {
    mo.armijo_beta = parse_real(key, value);
  } else if (key == "mo_armijo_sigma") {
    mo.armijo_sigma = parse_real(key, value);
  } else if (key == "mo_restarts") {
    mo.restarts = parse_integer<int>(key, value);
  } else if (key == "mo_init") {
    mo.init = parse_init(key, value);
  } else if (key == "out" || key == "output_path") {
    if (value.empty())
      bad_value(key, value, "a path");
    output_path = std::string(value);
  } else if (key == "format" || key == "output_format") {
    output_format = parse_format(value);
  } else {
    throw std::invalid_argument("unknown configuration key '" + std::string(key) + "'");
  }
}

void ExperimentConfig::validate() const {
  auto require = [](bool ok, const std::string& msg) {
    if (!ok)
      throw std::invalid_argument("experiment config: " + msg);
  };
  require(!N.empty() && !n_t.empty() && !K1.empty() && !K2.empty(),
          "sweep lists N, n_t, K1, K2 must be non-empty");
  for (int v : N)
    require(v >= 1, "every N must be >= 1");
  for (int v : n_t)
    require(v >= 1, "every n_t must be >= 1");
  for (double v : K1)
    require(v >= 0.0, "every K1 must be >= 0");
  for (double v : K2)
    require(v >= 0.0, "every K2 must be >= 0");
  require(trials >= 1, "trials must be >= 1");
  require(sigma2 > 0.0 && std::isfinite(sigma2), "sigma2 must be positive and finite");
  require(std::isfinite(angle_tx) && std::isfinite(angle_ris) &&
              (!angle_user || std::isfinite(*angle_user)),
          "angles must be finite");
  mo.validate();
  if (experiment == ExperimentKind::ORACLE) {
    require(brute_levels >= 2, "brute_levels must be >= 2");
    for (int v : N) {
      require(v <= kOracleMaxN, "oracle experiment is limited to N <= " +
                                    std::to_string(kOracleMaxN) + " (got " +
                                    std::to_string(v) + ")");
      const double grid = std::pow(static_cast<double>(brute_levels), v - 1);
      if (grid > solvers::kBruteForceBudget) {
        std::ostringstream msg;
        msg << "oracle experiment: N = " << v << " with brute_levels = " << brute_levels
            << " requires " << grid << " grid evaluations, budget is "
            << solvers::kBruteForceBudget;
        throw BudgetError(msg.str());
      }
    }
  }
}

void apply_config_text(ExperimentConfig& cfg, std::string_view text,
                       std::string_view origin) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;
    const auto eq = line.find('=');
    const std::string where = std::string(origin) + ":" + std::to_string(line_no) + ": ";
    if (eq == std::string_view::npos)
      throw std::invalid_argument(where + "expected 'key = value'");
    try {
      cfg.set(line.substr(0, eq), line.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + e.what());
    }
  }
}

void apply_config_file(ExperimentConfig& cfg, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError(path, "cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad())
    throw IoError(path, "read error");
  apply_config_text(cfg, buf.str(), path);
}

} // namespace torus_beam::experiment
