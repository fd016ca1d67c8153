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

#include <stdexcept>
#include <string>

namespace torus_beam {

// Precondition violations (bad sizes, out-of-range parameters) are reported
// with std::invalid_argument. The types below cover the remaining failure
// classes; the C API maps each one to its own status code.

class NonHermitianError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive search would exceed its evaluation budget.
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Non-finite values appeared inside an iterative solver.
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
  IoError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}

  const std::string& path() const noexcept { return path_; }

private:
  std::string path_;
};

} // namespace torus_beam
