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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "pqsvt/encoding.hpp"
#include "pqsvt/errors.hpp"
#include "pqsvt/qsvt.hpp"
#include "pqsvt/segmentation.hpp"
#include "test_util.hpp"

namespace pqsvt {
namespace {

SegmentPlan linear_plan(int n) {
    SegmentPlan plan = plan_from_levels(n, std::vector<int>{n});
    plan.segments[0].degree = 1;
    plan.segments[0].coeffs = {0.0, 1.0};
    plan.pmax = 1.0;
    return plan;
}

TEST(FlaggedState, AllOnesGivesUniform) {
    SegmentPlan plan = plan_from_levels(3, std::vector<int>{1, 1, 2});
    plan.pmax = 1.0;
    const auto state = flagged_state(plan, solve_plan_phases(plan));
    for (double g : state.good) EXPECT_NEAR(g, kQsvtHeadroom / std::sqrt(8.0), 1e-10);
    // Only the headroom leaks into the junk.
    EXPECT_NEAR(state.junk_norm, std::sqrt(1.0 - kQsvtHeadroom * kQsvtHeadroom), 1e-9);
}

TEST(FlaggedState, LinearOnFourPoints) {
    const auto plan = linear_plan(2);
    const auto state = flagged_state(plan, solve_plan_phases(plan));
    const double h = kQsvtHeadroom;
    const std::vector<double> expected = {h * 0.5, h * 0.25, 0.0, -h * 0.25};
    for (std::size_t x = 0; x < 4; ++x) EXPECT_NEAR(state.good[x], expected[x], 1e-10);
    EXPECT_NEAR(state.junk_norm * state.junk_norm, 1.0 - h * h * 1.5 / 4.0, 1e-10);
    EXPECT_NEAR(state.success_amplitude() * state.success_amplitude(), h * h * 1.5 / 4.0, 1e-10);
}

TEST(FlaggedState, SuccessAmplitudeIsMeanSquareOfDiagonal) {
    testing::Rng rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        const auto plan = testing::random_plan(rng, 6, 8, 3);
        const auto phases = solve_plan_phases(plan);
        const auto diag = apply_piecewise_qsvt(reference_diagonal(plan), phases);
        double sum = 0.0;
        for (double v : diag) sum += v * v;
        const auto state = flagged_state(plan, phases);
        EXPECT_NEAR(state.success_amplitude() * state.success_amplitude(), sum / 64.0, 1e-13);
        EXPECT_NEAR(state.junk_norm * state.junk_norm + sum / 64.0, 1.0, 1e-13);
    }
}

TEST(AaRounds, Examples) {
    EXPECT_EQ(aa_rounds_estimate(1.0, 4, 1.0).rounds, 0);

    const auto half = aa_rounds_estimate(1.0, 4, 0.5);
    EXPECT_EQ(half.rounds, 1);
    EXPECT_NEAR(half.post_success, 1.0, 1e-15);

    const auto tenth = aa_rounds_estimate(0.5, 64, 0.1);
    EXPECT_EQ(tenth.rounds, 7);
    EXPECT_NEAR(tenth.post_success, std::pow(std::sin(15 * std::asin(0.1)), 2), 1e-15);
    EXPECT_NEAR(tenth.post_success, 0.996, 1e-3);
    EXPECT_DOUBLE_EQ(tenth.pmax_sqrt_n, 4.0);

    EXPECT_THROW(aa_rounds_estimate(1.0, 4, 0.0), std::invalid_argument);
    EXPECT_THROW(aa_rounds_estimate(1.0, 4, 1.5), std::invalid_argument);
}

TEST(AaRounds, NearestIntegerNeverBelowZero) {
    testing::Rng rng(62);
    for (int trial = 0; trial < 500; ++trial) {
        const double a = testing::uniform(rng, 1e-4, 1.0);
        const auto est = aa_rounds_estimate(1.0, 2, a);
        const double ideal = std::numbers::pi / (4 * std::asin(a)) - 0.5;
        EXPECT_GE(est.rounds, 0);
        EXPECT_LE(std::abs(est.rounds - std::max(0.0, ideal)), 0.5 + 1e-12);
        // Nearest-integer choice keeps success within the overshoot envelope.
        EXPECT_GE(est.post_success, std::pow(std::cos(std::asin(a)), 2) - 1e-12);
    }
}

TEST(Amplify, TwoDimensionalMatchesClosedForm) {
    for (double a : {0.05, 0.1, 0.3, 0.7}) {
        for (int k = 0; k < 10; ++k) {
            const auto v = amplify_2d(a, k);
            EXPECT_NEAR(std::norm(v[0]), std::pow(std::sin((2 * k + 1) * std::asin(a)), 2), 1e-12);
            EXPECT_NEAR(std::norm(v[0]) + std::norm(v[1]), 1.0, 1e-12);
        }
    }
}

TEST(Amplify, PreservesGoodDirection) {
    testing::Rng rng(63);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t dim = static_cast<std::size_t>(testing::uniform_int(rng, 4, 32));
        std::vector<std::complex<double>> psi(dim);
        std::vector<std::uint8_t> mask(dim);
        double norm = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            psi[i] = {testing::uniform(rng, -1, 1), testing::uniform(rng, -1, 1)};
            mask[i] = testing::uniform(rng, 0, 1) < 0.3 ? 1 : 0;
            norm += std::norm(psi[i]);
        }
        mask[0] = 1;
        for (auto& p : psi) p /= std::sqrt(norm);
        double good0 = 0.0;
        for (std::size_t i = 0; i < dim; ++i) good0 += mask[i] ? std::norm(psi[i]) : 0.0;
        const int k = testing::uniform_int(rng, 1, 6);
        const auto out = amplify(psi, mask, k);
        double good = 0.0;
        for (std::size_t i = 0; i < dim; ++i) good += mask[i] ? std::norm(out[i]) : 0.0;
        EXPECT_NEAR(good, std::pow(std::sin((2 * k + 1) * std::asin(std::sqrt(good0))), 2), 1e-10);
        // Normalized good component is unchanged up to a global phase.
        std::complex<double> overlap = 0.0;
        for (std::size_t i = 0; i < dim; ++i)
            if (mask[i]) overlap += std::conj(psi[i]) * out[i];
        EXPECT_NEAR(std::abs(overlap), std::sqrt(good0 * good), 1e-10);
    }
}

TEST(Amplify, FullSpaceBlockEncodingState) {
    // Explicit block encoding of p(t) = t on up to five qubits: amplify the
    // flag-zero part of U |0, 0, uniform> in the full space.
    for (int n = 2; n <= 5; ++n) {
        const auto plan = plan_from_levels(n, std::vector<int>{n - 1, n - 2, n - 2});
        const auto U = build_explicit_unitary(plan);
        const std::size_t N = std::size_t{1} << n;
        Eigen::VectorXcd in = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(U.dim()));
        for (std::size_t x = 0; x < N; ++x) in(static_cast<Eigen::Index>(x)) = 1.0 / std::sqrt(static_cast<double>(N));
        const Eigen::VectorXcd out = U.dense() * in;
        std::vector<std::complex<double>> psi(out.data(), out.data() + out.size());
        std::vector<std::uint8_t> mask(psi.size(), 0);
        for (std::size_t x = 0; x < N; ++x) mask[x] = 1;

        const auto be = reference_diagonal(plan);
        double a2 = 0.0;
        for (double t : be.diag) a2 += t * t / static_cast<double>(N);
        const auto est = aa_rounds_estimate(1.0, static_cast<std::int64_t>(N), std::sqrt(a2));
        const auto amplified = amplify(psi, mask, est.rounds);
        double good = 0.0;
        for (std::size_t x = 0; x < N; ++x) good += std::norm(amplified[x]);
        EXPECT_NEAR(good, est.post_success, 1e-10);
        for (std::size_t x = 0; x < N; ++x) {
            EXPECT_NEAR(std::abs(amplified[x]) / std::sqrt(good), std::abs(be.diag[x]) / std::sqrt(a2 * N), 1e-10);
        }
    }
}

TEST(PreparedFidelity, SelfConsistentTarget) {
    testing::Rng rng(64);
    const auto plan = testing::random_plan(rng, 6, 6, 3);
    const auto phases = solve_plan_phases(plan);
    const auto target = normalize_amplitudes(evaluate_fitted(plan));
    EXPECT_NEAR(prepared_fidelity(plan, phases, target), 1.0, 1e-9);
}

TEST(PreparedFidelity, PowerDyadicPlan) {
    const TargetSpec spec{PowerTarget{0.5}, 8};
    const auto plan = dyadic_cascade_plan(spec, 4);
    const auto report = prepare_report(plan, solve_plan_phases(plan), sample_target(spec));
    EXPECT_GE(report.fidelity, 1.0 - 1e-3);
    EXPECT_FALSE(report.inefficient);
}

TEST(PreparedFidelity, BsplineExactPlan) {
    const TargetSpec spec{BsplineTarget{4}, 6};
    const auto plan = bspline_piecewise_coefficients(4, 6);
    const auto report = prepare_report(plan, solve_plan_phases(plan), sample_target(spec));
    EXPECT_GE(report.fidelity, 1.0 - 1e-6);
    EXPECT_NEAR(report.post_aa_success, std::pow(std::sin((2 * report.aa_rounds + 1) * std::asin(report.success_amplitude)), 2),
                1e-14);
}

TEST(PreparedFidelity, ZeroGoodVectorThrows) {
    SegmentPlan plan = plan_from_levels(2, std::vector<int>{2});
    plan.segments[0].coeffs = {0.0};
    plan.pmax = 1.0;
    const auto phases = solve_plan_phases(plan);
    EXPECT_THROW(prepared_fidelity(plan, phases, normalize_amplitudes({1, 1, 1, 1})), NumericError);
}

TEST(Prior, RatioLoadingRecoversTarget) {
    // Load the power target on top of a linear-ramp prior by fitting a_x / c_x.
    const int n = 6;
    const auto target = sample_target(TargetSpec{PowerTarget{0.5}, n});
    std::vector<double> ramp(64);
    for (std::size_t x = 0; x < ramp.size(); ++x) ramp[x] = 1.0 + static_cast<double>(x);
    const auto prior = normalize_amplitudes(ramp);
    const auto ratio = prior_ratio_samples(target, prior);
    double peak = 0.0;
    for (double r : ratio) peak = std::max(peak, std::abs(r));
    std::vector<double> scaled(ratio);
    for (double& r : scaled) r /= peak;
    const auto plan = optimal_cuts(scaled, 4, 1e-6);
    const auto phases = solve_plan_phases(plan);
    EXPECT_GE(prepared_fidelity(plan, phases, target, prior), 1.0 - 1e-8);
    const auto state = flagged_state(plan, phases, prior);
    for (std::size_t x = 0; x < 64; ++x) {
        const double implied = state.good[x] / state.success_amplitude();
        EXPECT_NEAR(implied, target.values[x], 1e-5);
    }
}

TEST(AaScaling, BsplineRoundsIndependentOfN) {
    int lo = 1 << 30;
    int hi = -1;
    for (int n : {6, 8, 10, 12}) {
        const TargetSpec spec{BsplineTarget{4}, n};
        const auto plan = bspline_piecewise_coefficients(4, n);
        const auto report = prepare_report(plan, solve_plan_phases(plan), sample_target(spec));
        lo = std::min(lo, report.aa_rounds);
        hi = std::max(hi, report.aa_rounds);
    }
    EXPECT_LE(hi - lo, 1);
}

}  // namespace
}  // namespace pqsvt
