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
#include "torus_beam/experiment.hpp"

#include <string>
#include <string_view>

namespace torus_beam::experiment {

/// Shortest "%.9g"-style rendering, locale independent: '.' separator, no
/// grouping, "inf"/"-inf"/"nan" for non-finite values.
std::string format_real(double x);

/// Header row, then one row per sweep point; '\n' line endings.
std::string to_csv(const ResultTable& table);

/// Array of row objects keyed like the CSV header. Non-finite numbers are
/// written as the strings "inf", "-inf", "nan".
std::string to_json(const ResultTable& table);

std::string render(const ResultTable& table, OutputFormat format);

/// Writes the rendered table to `path`, or to standard output for "-".
/// Throws IoError carrying the path.
void emit(const ResultTable& table, const std::string& path, OutputFormat format);

/// Inverse of to_csv. Throws std::invalid_argument on malformed input.
ResultTable parse_csv(std::string_view text);

} // namespace torus_beam::experiment
