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

#include "pqsvt/encoding.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "pqsvt/errors.hpp"
#include "test_util.hpp"

namespace pqsvt {
namespace {

SegmentPlan fig3_plan() { return plan_from_levels(5, std::vector<int>{3, 1, 1, 2, 4}); }

TEST(ReferenceDiagonal, SingleSegment) {
    const auto be = reference_diagonal(plan_from_levels(3, std::vector<int>{3}));
    EXPECT_EQ(be.diag[0], 1.0);
    EXPECT_EQ(be.diag[4], 0.0);
    EXPECT_EQ(be.diag[7], -0.75);
    EXPECT_EQ(be.flag_qubits, 4);
}

TEST(ReferenceDiagonal, ResetsAtSegmentBoundary) {
    const auto be = reference_diagonal(plan_from_levels(3, std::vector<int>{2, 2}));
    EXPECT_EQ(be.diag[4], 1.0);
    EXPECT_EQ(be.diag[5], 0.5);
    EXPECT_EQ(be.segment_index[5], 1u);
}

TEST(ReferenceDiagonal, Fig3SegmentsStartAtOne) {
    const auto plan = fig3_plan();
    const auto be = reference_diagonal(plan);
    ASSERT_EQ(plan.segments.size(), 5u);
    for (const auto& s : plan.segments) {
        EXPECT_EQ(be.diag[static_cast<std::size_t>(s.start)], 1.0);
        const double last = be.diag[static_cast<std::size_t>(s.end() - 1)];
        EXPECT_EQ(last, -1.0 + 2.0 / static_cast<double>(s.length));
    }
}

TEST(ReferenceDiagonal, ExactRationals) {
    testing::Rng rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = testing::uniform_int(rng, 1, 8);
        const auto plan = plan_from_levels(n, testing::random_levels(rng, n, 12));
        const auto be = reference_diagonal(plan);
        for (std::int64_t x = 0; x < plan.size(); ++x) {
            const auto& s = plan.segments[plan.segment_of(x)];
            const auto& q = be.exact[static_cast<std::size_t>(x)];
            // q = (L - 2r) / L, compared by cross-multiplication.
            const std::int64_t r = x - s.start;
            EXPECT_EQ(q.numerator * s.length, (s.length - 2 * r) * (std::int64_t{1} << q.level));
            EXPECT_EQ(be.diag[static_cast<std::size_t>(x)], q.value());
        }
    }
}

TEST(ReferenceDiagonal, UnsignedVariant) {
    const auto be = reference_diagonal(plan_from_levels(2, std::vector<int>{2}), EncodingRange::kUnsigned);
    EXPECT_EQ(be.diag, (std::vector<double>{1.0, 0.75, 0.5, 0.25}));
}

TEST(CarryBit, Examples) {
    EXPECT_TRUE(carry_bit(4, 5, 3));
    EXPECT_TRUE(carry_bit(7, 1, 3));
    for (std::uint64_t k = 0; k < 8; ++k) EXPECT_FALSE(carry_bit(0, k, 3));
    EXPECT_FALSE(carry_bit(7, 1, 0));
}

TEST(CarryLadder, Example) {
    EXPECT_EQ(ripple_carry_reference(5, 3, 3), (std::vector<std::uint8_t>{1, 1, 1}));
    EXPECT_EQ(ripple_carry_reference(0, 7, 3), (std::vector<std::uint8_t>{0, 0, 0}));
}

TEST(CarryLadder, ExhaustiveAgainstArithmetic) {
    for (int l_max = 1; l_max <= 6; ++l_max) {
        const std::uint64_t M = std::uint64_t{1} << l_max;
        for (std::uint64_t x = 0; x < M; ++x) {
            for (std::uint64_t k = 0; k < M; ++k) {
                const auto state = run_carry_ladder(x, k, l_max);
                ASSERT_EQ(state.carries.size(), static_cast<std::size_t>(l_max));
                for (int l = 1; l <= l_max; ++l) {
                    EXPECT_EQ(state.carries[static_cast<std::size_t>(l - 1)] != 0, carry_bit(x, k, l))
                        << "x=" << x << " k=" << k << " l=" << l;
                }
                EXPECT_EQ(state.x, x);
            }
        }
    }
}

// Independent dense construction with Kronecker products.
Eigen::MatrixXcd reference_unitary(const SegmentPlan& plan, EncodingRange range) {
    const int n = plan.n;
    const int l_max = plan.l_max();
    const std::size_t N = std::size_t{1} << n;
    const std::size_t K = std::size_t{1} << l_max;
    const std::size_t dim = 2 * K * N;
    Eigen::Matrix2cd H;
    H << 1, 1, 1, -1;
    H /= std::sqrt(2.0);
    Eigen::Matrix2cd X;
    X << 0, 1, 1, 0;
    Eigen::MatrixXcd Hk = Eigen::MatrixXcd::Identity(1, 1);
    for (int q = 0; q < l_max; ++q) {
        Eigen::MatrixXcd next(Hk.rows() * 2, Hk.cols() * 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) next.block(i * Hk.rows(), j * Hk.cols(), Hk.rows(), Hk.cols()) = H(i, j) * Hk;
        Hk = next;
    }
    const Eigen::Matrix2cd flag_in = range == EncodingRange::kSigned ? Eigen::Matrix2cd(H * X) : Eigen::Matrix2cd::Identity();
    Eigen::MatrixXcd v_in = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t k = 0; k < K; ++k)
                for (std::size_t j = 0; j < K; ++j)
                    for (std::size_t x = 0; x < N; ++x) {
                        v_in((a * K + k) * N + x, (b * K + j) * N + x) = flag_in(a, b) * Hk(k, j);
                    }
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t k = 0; k < K; ++k)
            for (std::size_t x = 0; x < N; ++x) {
                const int l = plan.segments[plan.segment_of(static_cast<std::int64_t>(x))].level();
                const std::size_t a2 = a ^ (carry_bit(x, k, l) ? 1 : 0);
                C((a2 * K + k) * N + x, (a * K + k) * N + x) = 1.0;
            }
    return v_in.adjoint() * C * v_in;
}

TEST(ExplicitUnitary, MatchesKroneckerConstruction) {
    testing::Rng rng(42);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = testing::uniform_int(rng, 1, 4);
        const auto plan = plan_from_levels(n, testing::random_levels(rng, n, 6));
        for (auto range : {EncodingRange::kSigned, EncodingRange::kUnsigned}) {
            const auto U = build_explicit_unitary(plan, range);
            const Eigen::MatrixXcd ref = reference_unitary(plan, range);
            EXPECT_LE((U.dense() - ref).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
}

TEST(ExplicitUnitary, SingleSegmentLengthTwo) {
    const auto plan = plan_from_levels(1, std::vector<int>{1});
    const auto U = build_explicit_unitary(plan);
    const auto block = block_of(U, plan);
    EXPECT_NEAR(block[0], 1.0, 1e-14);
    EXPECT_NEAR(block[1], 0.0, 1e-14);
}

TEST(ExplicitUnitary, IdentityPlanAtOneQubit) {
    const auto plan = plan_from_levels(1, std::vector<int>{0, 0});
    const auto U = build_explicit_unitary(plan);
    EXPECT_EQ(U.l_max(), 0);
    const auto block = block_of(U, plan);
    EXPECT_NEAR(block[0], 1.0, 1e-14);
    EXPECT_NEAR(block[1], 1.0, 1e-14);
}

TEST(ExplicitUnitary, Fig3PlanHermitianUnitaryAndExact) {
    const auto plan = fig3_plan();
    const auto U = build_explicit_unitary(plan);
    EXPECT_EQ(U.dim(), std::size_t{1} << 10);
    EXPECT_LE(U.hermiticity_defect(), 1e-12);
    EXPECT_LE(U.unitarity_defect(), 1e-12);
    const auto block = block_of(U, plan);
    const auto be = reference_diagonal(plan);
    for (std::size_t x = 0; x < block.size(); ++x) EXPECT_NEAR(block[x], be.diag[x], 1e-12) << "x=" << x;
}

TEST(ExplicitUnitary, RandomPlansMatchReference) {
    testing::Rng rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = testing::uniform_int(rng, 1, 6);
        const auto plan = plan_from_levels(n, testing::random_levels(rng, n, 10));
        const auto range = trial % 2 ? EncodingRange::kUnsigned : EncodingRange::kSigned;
        const auto U = build_explicit_unitary(plan, range);
        EXPECT_LE(U.hermiticity_defect(), 1e-12);
        EXPECT_LE(U.unitarity_defect(), 1e-12);
        const auto block = block_of(U, plan);
        const auto be = reference_diagonal(plan, range);
        for (std::size_t x = 0; x < block.size(); ++x) ASSERT_NEAR(block[x], be.diag[x], 1e-12);
    }
}

TEST(ExplicitUnitary, JunkStaysOutOfTheFlagZeroBlock) {
    testing::Rng rng(44);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = testing::uniform_int(rng, 2, 5);
        const auto plan = plan_from_levels(n, testing::random_levels(rng, n, 8));
        const auto U = build_explicit_unitary(plan);
        const auto be = reference_diagonal(plan);
        const std::size_t N = std::size_t{1} << n;
        // Random input supported on flag zero.
        Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(U.dim()));
        for (std::size_t x = 0; x < N; ++x) psi(static_cast<Eigen::Index>(x)) = {testing::uniform(rng, -1, 1), testing::uniform(rng, -1, 1)};
        const Eigen::VectorXcd out = U.dense() * psi;
        double junk = 0.0;
        double expected_junk = 0.0;
        for (std::size_t x = 0; x < N; ++x) {
            const double t = be.diag[x];
            EXPECT_LE(std::abs(out(static_cast<Eigen::Index>(x)) - t * psi(static_cast<Eigen::Index>(x))), 1e-12);
            expected_junk += std::norm(psi(static_cast<Eigen::Index>(x))) * (1.0 - t * t);
        }
        for (Eigen::Index i = static_cast<Eigen::Index>(N); i < out.size(); ++i) junk += std::norm(out(i));
        EXPECT_NEAR(junk, expected_junk, 1e-12);
    }
}

TEST(ExplicitUnitary, BlockDiagonalInX) {
    const auto plan = plan_from_levels(2, std::vector<int>{1, 1});
    const auto U = build_explicit_unitary(plan);
    const auto dense = U.dense();
    const std::size_t N = 4;
    for (std::size_t r = 0; r < U.dim(); ++r)
        for (std::size_t c = 0; c < U.dim(); ++c)
            if (r % N != c % N) {
                EXPECT_EQ(dense(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)), 0.0);
            }
}

TEST(ExplicitUnitary, GuardsDimension) {
    const auto plan = plan_from_levels(10, std::vector<int>{10});
    EXPECT_THROW(build_explicit_unitary(plan), std::invalid_argument);
}

TEST(DiagonalCsv, HeaderAndRows) {
    std::ostringstream os;
    write_diagonal_csv(os, reference_diagonal(plan_from_levels(1, std::vector<int>{0, 0})));
    EXPECT_EQ(os.str(), "x,t_x,segment_index\n0,1,0\n1,1,1\n");
}

}  // namespace
}  // namespace pqsvt
