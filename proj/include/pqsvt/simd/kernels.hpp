// Copyright 2026 The pqsvt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <string_view>

namespace pqsvt::simd {

// Data-parallel inner loops. Every kernel has a scalar reference version and
// an optional vectorized version; the public entry points below forward to
// whichever level is active.

enum class Level { kScalar, kAvx2 };

std::string_view level_name(Level level);

// Highest level supported by both the build and the running CPU.
Level detected_level();

// Level currently used by the dispatching entry points. Initialized from
// detected_level(), capped by PQSVT_SIMD=scalar in the environment.
Level active_level();

// Forces a level; returns false (and leaves the level unchanged) if the
// requested level is unavailable on this machine or build.
bool set_active_level(Level level);

// out[i] = sum_k coeffs[k] T_k(t[i]) via the Clenshaw recurrence.
void chebyshev_eval(std::span<const double> coeffs, std::span<const double> t, std::span<double> out);

// out[i] = flag-zero block value of the indefinite-parity QSVT sequence with
// the given phases, at signal value t[i] in [-1, 1]. See qsvt.hpp for the
// convention.
void qsvt_block_values(std::span<const double> phases, std::span<const double> t, std::span<double> out);

double dot(std::span<const double> a, std::span<const double> b);

// Per-level implementations, exposed for equivalence testing.
namespace scalar {
void chebyshev_eval(std::span<const double> coeffs, std::span<const double> t, std::span<double> out);
void qsvt_block_values(std::span<const double> phases, std::span<const double> t, std::span<double> out);
double dot(std::span<const double> a, std::span<const double> b);
}  // namespace scalar

namespace avx2 {
bool compiled();
void chebyshev_eval(std::span<const double> coeffs, std::span<const double> t, std::span<double> out);
void qsvt_block_values(std::span<const double> phases, std::span<const double> t, std::span<double> out);
double dot(std::span<const double> a, std::span<const double> b);
}  // namespace avx2

}  // namespace pqsvt::simd
