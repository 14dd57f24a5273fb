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

#include "pqsvt/prep.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pqsvt/errors.hpp"
#include "pqsvt/simd/kernels.hpp"

namespace pqsvt {

double FlaggedState::success_amplitude() const { return std::sqrt(simd::dot(good, good)); }

FlaggedState flagged_state(const SegmentPlan& plan, const PhaseFactorSet& phases,
                           const std::optional<AmplitudeVector>& prior) {
    const DiagonalBlockEncoding be = reference_diagonal(plan);
    std::vector<double> good = apply_piecewise_qsvt(be, phases);
    const auto N = static_cast<std::size_t>(plan.size());
    if (prior) {
        if (prior->values.size() != N) throw std::invalid_argument("flagged_state: prior size must be 2^n");
        const double norm2 = simd::dot(prior->values, prior->values);
        if (std::abs(norm2 - 1.0) > 1e-9) throw std::invalid_argument("flagged_state: prior must be unit norm");
        for (std::size_t x = 0; x < N; ++x) good[x] *= prior->values[x];
    } else {
        const double c = 1.0 / std::sqrt(static_cast<double>(N));
        for (double& g : good) g *= c;
    }
    FlaggedState state;
    state.good = std::move(good);
    state.junk_norm = std::sqrt(std::max(0.0, 1.0 - simd::dot(state.good, state.good)));
    return state;
}

AaEstimate aa_rounds_estimate(double pmax, std::int64_t N, double success_amplitude) {
    if (!(success_amplitude > 0.0 && success_amplitude <= 1.0)) {
        throw std::invalid_argument("aa_rounds_estimate: success amplitude must be in (0, 1]");
    }
    if (N < 1) throw std::invalid_argument("aa_rounds_estimate: N must be positive");
    const double angle = std::asin(success_amplitude);
    AaEstimate est;
    est.rounds = std::max(0, static_cast<int>(std::lround(std::numbers::pi / (4.0 * angle) - 0.5)));
    const double s = std::sin((2.0 * est.rounds + 1.0) * angle);
    est.post_success = s * s;
    est.pmax_sqrt_n = pmax * std::sqrt(static_cast<double>(N));
    return est;
}

namespace {

double fidelity_of(const std::vector<double>& good, const AmplitudeVector& target) {
    if (target.values.size() != good.size()) throw std::invalid_argument("prepared_fidelity: target size mismatch");
    const double norm = std::sqrt(simd::dot(good, good));
    // Below this the direction is solver noise rather than a prepared state.
    constexpr double kVanishingNorm = 1e-9;
    if (!(norm > kVanishingNorm)) throw NumericError("prepared_fidelity: the good component vanishes", norm);
    return std::min(1.0, std::abs(simd::dot(target.values, good)) / norm);
}

}  // namespace

double prepared_fidelity(const SegmentPlan& plan, const PhaseFactorSet& phases, const AmplitudeVector& target,
                         const std::optional<AmplitudeVector>& prior) {
    return fidelity_of(flagged_state(plan, phases, prior).good, target);
}

PrepReport prepare_report(const SegmentPlan& plan, const PhaseFactorSet& phases, const AmplitudeVector& target,
                          const std::optional<AmplitudeVector>& prior) {
    const FlaggedState state = flagged_state(plan, phases, prior);
    PrepReport report;
    report.fidelity = fidelity_of(state.good, target);
    report.success_amplitude = state.success_amplitude();
    const AaEstimate aa = aa_rounds_estimate(plan.pmax, plan.size(), std::min(1.0, report.success_amplitude));
    report.aa_rounds = aa.rounds;
    report.post_aa_success = aa.post_success;
    report.pmax_sqrtN = aa.pmax_sqrt_n;
    report.inefficient = report.pmax_sqrtN > kInefficientPmaxSqrtN;
    return report;
}

std::vector<std::complex<double>> amplify(std::span<const std::complex<double>> psi,
                                          std::span<const std::uint8_t> good_mask, int rounds) {
    if (psi.size() != good_mask.size()) throw std::invalid_argument("amplify: mask size mismatch");
    if (rounds < 0) throw std::invalid_argument("amplify: rounds must be nonnegative");
    std::vector<std::complex<double>> state(psi.begin(), psi.end());
    for (int r = 0; r < rounds; ++r) {
        // I - 2 Pi_good
        for (std::size_t i = 0; i < state.size(); ++i) {
            if (good_mask[i]) state[i] = -state[i];
        }
        // -(I - 2|psi><psi|) = 2|psi><psi| - I
        std::complex<double> overlap = 0.0;
        for (std::size_t i = 0; i < state.size(); ++i) overlap += std::conj(psi[i]) * state[i];
        for (std::size_t i = 0; i < state.size(); ++i) state[i] = 2.0 * overlap * psi[i] - state[i];
    }
    return state;
}

std::vector<std::complex<double>> amplify_2d(double success_amplitude, int rounds) {
    if (!(success_amplitude >= 0.0 && success_amplitude <= 1.0)) {
        throw std::invalid_argument("amplify_2d: amplitude must be in [0, 1]");
    }
    const std::complex<double> psi[2] = {success_amplitude, std::sqrt(1.0 - success_amplitude * success_amplitude)};
    const std::uint8_t mask[2] = {1, 0};
    return amplify(psi, mask, rounds);
}

std::vector<double> prior_ratio_samples(const AmplitudeVector& target, const AmplitudeVector& prior) {
    if (target.values.size() != prior.values.size()) throw std::invalid_argument("prior_ratio_samples: size mismatch");
    std::vector<double> out(target.values.size());
    for (std::size_t x = 0; x < out.size(); ++x) {
        if (prior.values[x] == 0.0) {
            if (target.values[x] != 0.0) {
                throw std::invalid_argument("prior_ratio_samples: prior vanishes where the target does not, at x = " +
                                            std::to_string(x));
            }
            out[x] = 0.0;
        } else {
            out[x] = target.values[x] / prior.values[x];
        }
    }
    return out;
}

}  // namespace pqsvt
