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

#include "torus_beam/types.hpp"

#include <cstdint>
#include <random>

namespace torus_beam {

/// SplitMix64 finalizer. Used for seed derivation, never as a stream.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Portable Gaussian stream.
///
/// The raw engine is std::mt19937_64, whose output sequence is fixed by the
/// C++ standard. Uniforms and normals are derived here rather than through
/// <random> distributions, whose algorithms are implementation-defined, so a
/// seed reproduces the same draws under every standard library.
class GaussianStream {
public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

  /// Circularly symmetric complex normal with E|z|^2 = 1: (x + jy)/sqrt(2).
  /// Consumes exactly two engine outputs (Box-Muller on one pair).
  Complex complex_normal();

private:
  std::mt19937_64 engine_;
};

} // namespace torus_beam
