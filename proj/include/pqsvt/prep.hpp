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

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pqsvt/amplitudes.hpp"
#include "pqsvt/encoding.hpp"
#include "pqsvt/plan.hpp"
#include "pqsvt/qsvt.hpp"

namespace pqsvt {

// Flag-zero part of the state after applying the transformed block encoding
// to a prior superposition sum_x c_x |x>.
struct FlaggedState {
    std::vector<double> good;  // c_x * (transformed diagonal)_x
    double junk_norm = 0.0;    // sqrt(1 - |good|^2)

    double success_amplitude() const;  // |good|
};

// A missing prior means the uniform superposition 1/sqrt(N).
FlaggedState flagged_state(const SegmentPlan& plan, const PhaseFactorSet& phases,
                           const std::optional<AmplitudeVector>& prior = std::nullopt);

struct AaEstimate {
    int rounds = 0;               // round(pi / (4 asin a) - 1/2), floored at 0
    double post_success = 0.0;    // sin^2((2k + 1) asin a)
    double pmax_sqrt_n = 0.0;     // the p~max sqrt(N) predictor
};

AaEstimate aa_rounds_estimate(double pmax, std::int64_t N, double success_amplitude);

// |<target, good / |good|>|. Throws NumericError if |good| <= 1e-9, where the
// direction is dominated by phase-solver error.
double prepared_fidelity(const SegmentPlan& plan, const PhaseFactorSet& phases, const AmplitudeVector& target,
                         const std::optional<AmplitudeVector>& prior = std::nullopt);

inline constexpr double kInefficientPmaxSqrtN = 10.0;

struct PrepReport {
    double fidelity = 0.0;
    double success_amplitude = 0.0;
    int aa_rounds = 0;
    double post_aa_success = 0.0;
    double pmax_sqrtN = 0.0;
    bool inefficient = false;  // pmax_sqrtN > kInefficientPmaxSqrtN
};

PrepReport prepare_report(const SegmentPlan& plan, const PhaseFactorSet& phases, const AmplitudeVector& target,
                          const std::optional<AmplitudeVector>& prior = std::nullopt);

// Grover iterate G = -(I - 2|psi><psi|)(I - 2 Pi_good) applied `rounds` times
// to psi, with both reflections built explicitly. Works in any dimension;
// good_mask marks the good basis states.
std::vector<std::complex<double>> amplify(std::span<const std::complex<double>> psi,
                                          std::span<const std::uint8_t> good_mask, int rounds);

// Two-dimensional case: start (a, sqrt(1 - a^2)) with the first coordinate
// good. Returns the state after `rounds` iterations.
std::vector<std::complex<double>> amplify_2d(double success_amplitude, int rounds);

// Ratio a_x / c_x for loading a target relative to a nonuniform prior state.
// Entries where the prior vanishes must have zero target.
std::vector<double> prior_ratio_samples(const AmplitudeVector& target, const AmplitudeVector& prior);

}  // namespace pqsvt
