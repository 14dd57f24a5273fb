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

// Runtime kernel selection. This file is compiled without -mavx2 so the CPUID
// probe itself never executes AVX instructions.

#include <atomic>
#include <cstdlib>
#include <string>

#include "pqsvt/simd/kernels.hpp"

namespace pqsvt::simd {

#ifndef PQSVT_HAVE_AVX2
namespace avx2 {
bool compiled() { return false; }
void chebyshev_eval(std::span<const double> coeffs, std::span<const double> t, std::span<double> out) {
    scalar::chebyshev_eval(coeffs, t, out);
}
void qsvt_block_values(std::span<const double> phases, std::span<const double> t, std::span<double> out) {
    scalar::qsvt_block_values(phases, t, out);
}
double dot(std::span<const double> a, std::span<const double> b) { return scalar::dot(a, b); }
}  // namespace avx2
#endif

namespace {

bool cpu_has_avx2() {
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Level initial_level() {
    Level level = detected_level();
    if (const char* env = std::getenv("PQSVT_SIMD")) {
        if (std::string(env) == "scalar") level = Level::kScalar;
    }
    return level;
}

std::atomic<Level>& level_slot() {
    static std::atomic<Level> slot{initial_level()};
    return slot;
}

}  // namespace

std::string_view level_name(Level level) {
    switch (level) {
        case Level::kScalar:
            return "scalar";
        case Level::kAvx2:
            return "avx2";
    }
    return "unknown";
}

Level detected_level() {
    static const Level level = (avx2::compiled() && cpu_has_avx2()) ? Level::kAvx2 : Level::kScalar;
    return level;
}

Level active_level() { return level_slot().load(std::memory_order_relaxed); }

bool set_active_level(Level level) {
    if (level == Level::kAvx2 && detected_level() != Level::kAvx2) return false;
    level_slot().store(level, std::memory_order_relaxed);
    return true;
}

void chebyshev_eval(std::span<const double> coeffs, std::span<const double> t, std::span<double> out) {
    if (active_level() == Level::kAvx2) {
        avx2::chebyshev_eval(coeffs, t, out);
    } else {
        scalar::chebyshev_eval(coeffs, t, out);
    }
}

void qsvt_block_values(std::span<const double> phases, std::span<const double> t, std::span<double> out) {
    if (active_level() == Level::kAvx2) {
        avx2::qsvt_block_values(phases, t, out);
    } else {
        scalar::qsvt_block_values(phases, t, out);
    }
}

double dot(std::span<const double> a, std::span<const double> b) {
    return active_level() == Level::kAvx2 ? avx2::dot(a, b) : scalar::dot(a, b);
}

}  // namespace pqsvt::simd
