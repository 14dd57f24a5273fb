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

#include "pqsvt/cost.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "test_util.hpp"

namespace pqsvt {
namespace {

TEST(BeToffoli, Examples) {
    EXPECT_EQ(be_toffoli(5, 4), 13);
    EXPECT_EQ(be_toffoli(1, 4), 5);
    EXPECT_EQ(be_toffoli(5, 4, BeVariant::uniform_sizes()), 5);
    EXPECT_EQ(be_toffoli(5, 4, BeVariant::k_unique(2)), 7);
    EXPECT_THROW(be_toffoli(2, 4, BeVariant::k_unique(3)), std::invalid_argument);
    EXPECT_THROW(be_toffoli(0, 4), std::invalid_argument);
}

TEST(BeToffoli, VariantsAgreeAtSingleSegmentOrSingleSize) {
    for (std::int64_t l = 1; l <= 20; ++l) {
        EXPECT_EQ(be_toffoli(1, l), be_toffoli(1, l, BeVariant::uniform_sizes()));
        EXPECT_EQ(be_toffoli(1, l), be_toffoli(1, l, BeVariant::k_unique(1)));
        for (std::int64_t S = 1; S <= 10; ++S) EXPECT_EQ(be_toffoli(S, l, BeVariant::k_unique(1)), l + 1);
    }
}

TEST(QsvtToffoli, Examples) {
    EXPECT_EQ(qsvt_toffoli(2, 5, 4, 10), 123);
    EXPECT_EQ(qsvt_toffoli(1, 2, 1, 2), 15);
    EXPECT_EQ(qsvt_toffoli(2, 5, 4, 10, BeVariant::uniform_sizes()), 91);
    EXPECT_THROW(qsvt_toffoli(0, 5, 4, 10), std::invalid_argument);
    EXPECT_THROW(qsvt_toffoli(2, 5, 4, 1), std::invalid_argument);
}

TEST(QsvtToffoli, ClosedFormOnRandomTuples) {
    testing::Rng rng(71);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::int64_t d = testing::uniform_int(rng, 1, 64);
        const std::int64_t S = testing::uniform_int(rng, 2, 200);
        const std::int64_t l = testing::uniform_int(rng, 1, 40);
        const std::int64_t e = testing::uniform_int(rng, 2, 60);
        const std::int64_t expected = (2 * d + 1) * (e - 1) + 2 * (S - 2) + 2 * d * (l + 1) + 2 * d * (l + 2 * S - 1);
        ASSERT_EQ(qsvt_toffoli(d, S, l, e), expected);
    }
}

TEST(QsvtToffoli, MonotoneInDegreeAndSegments) {
    testing::Rng rng(72);
    for (int trial = 0; trial < 300; ++trial) {
        const std::int64_t d = testing::uniform_int(rng, 1, 30);
        const std::int64_t S = testing::uniform_int(rng, 1, 60);
        const std::int64_t l = testing::uniform_int(rng, 1, 20);
        const std::int64_t e = testing::uniform_int(rng, 2, 40);
        EXPECT_LE(qsvt_toffoli(d, S, l, e), qsvt_toffoli(d + 1, S, l, e));
        EXPECT_LE(qsvt_toffoli(d, S, l, e), qsvt_toffoli(d, S + 1, l, e));
        EXPECT_GE(qsvt_toffoli(d, S, l, e), 0);
    }
}

TEST(TotalQubits, Examples) {
    EXPECT_EQ(total_qubits(8, 2, 4, 10), 79);
    EXPECT_EQ(total_qubits(1, 1, 1, 1), 12);
    EXPECT_GT(total_qubits(8, 2, 4, 10), 8 + 4);
}

TEST(PrepTotal, Examples) {
    const auto est = estimate_resources(8, 2, 5, 4, 10, 0, BeVariant::general());
    EXPECT_EQ(est.toffoli_per_be, 13);
    EXPECT_EQ(est.toffoli_qsvt, 123);
    EXPECT_EQ(est.qubits_total, 79);
    EXPECT_EQ(prep_total_toffoli(est, 0, 8), 123);
    EXPECT_EQ(prep_total_toffoli(est, 1, 8), 264);
    EXPECT_EQ(multi_controlled_z_toffoli(6), 5);
    EXPECT_EQ(multi_controlled_z_toffoli(14), 13);
    EXPECT_THROW(prep_total_toffoli(est, -1, 8), std::invalid_argument);
}

TEST(PrepTotal, AsymptoticEnvelope) {
    for (std::int64_t A : {1, 3, 10}) {
        for (std::int64_t d : {1, 4, 16}) {
            for (std::int64_t e : {4, 10, 30}) {
                for (std::int64_t n = 4; n <= 20; ++n) {
                    const auto est = estimate_resources(n, d, n, n, e, A, BeVariant::general());
                    const double ratio = static_cast<double>(est.toffoli_total_with_aa) /
                                         static_cast<double>(A * d * std::max(n, e));
                    EXPECT_LE(ratio, 32.0) << "n=" << n << " d=" << d << " eps=" << e;
                }
            }
        }
    }
}

TEST(CheapestVariant, FollowsSegmentSizes) {
    EXPECT_EQ(cheapest_variant(plan_from_levels(4, std::vector<int>{2, 2, 2, 2})).kind, BeVariantKind::kUniformSizes);
    const auto mixed = plan_from_levels(4, std::vector<int>{3, 2, 1, 1});
    const auto v = cheapest_variant(mixed);
    EXPECT_EQ(v.kind, BeVariantKind::kKUnique);
    EXPECT_EQ(v.k, 3);
    const auto est = estimate_for_plan(mixed, 3, 12, 2);
    EXPECT_EQ(est.toffoli_per_be, 3 + 2 * 3 - 1);
    EXPECT_LE(est.toffoli_qsvt, qsvt_toffoli(3, 4, 3, 12));
}

TEST(CostCsv, Format) {
    std::ostringstream os;
    write_cost_csv_header(os);
    write_cost_csv_row(os, estimate_resources(8, 2, 5, 4, 10, 0, BeVariant::k_unique(2)));
    EXPECT_EQ(os.str(), "n,d,S,l_max,log_inv_eps,variant,toffoli,qubits\n8,2,5,4,10,k_unique(2),99,79\n");
    EXPECT_EQ(BeVariant::uniform_sizes().name(), "uniform_sizes");
}

}  // namespace
}  // namespace pqsvt
