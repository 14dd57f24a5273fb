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

#include "pqsvt/chebyshev.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace pqsvt {
namespace {

TEST(Chebyshev, ValueMatchesTrigonometricDefinition) {
    const std::vector<double> c = {0.3, -0.2, 0.7, 0.1};
    for (double t : {-1.0, -0.4, 0.0, 0.33, 1.0}) {
        double expected = 0.0;
        for (std::size_t k = 0; k < c.size(); ++k) expected += c[k] * std::cos(static_cast<double>(k) * std::acos(t));
        EXPECT_NEAR(chebyshev_value(c, t), expected, 1e-14);
    }
}

TEST(Chebyshev, InterpolationRecoversPolynomial) {
    // 4t^3 - 3t = T3(t); plus 2t^2 - 1 = T2(t).
    const auto c = chebyshev_interpolate([](double t) { return 4 * t * t * t - 3 * t + 2 * t * t - 1; }, 5);
    ASSERT_EQ(c.size(), 6u);
    EXPECT_NEAR(c[0], 0.0, 1e-14);
    EXPECT_NEAR(c[1], 0.0, 1e-14);
    EXPECT_NEAR(c[2], 1.0, 1e-14);
    EXPECT_NEAR(c[3], 1.0, 1e-14);
    EXPECT_NEAR(c[4], 0.0, 1e-14);
    EXPECT_NEAR(c[5], 0.0, 1e-14);
}

TEST(Chebyshev, LeastSquaresMatchesNormalEquations) {
    // Fit a line to |t| on 8 points; the 2x2 normal equations give the answer.
    std::vector<double> t, y;
    for (int j = 0; j < 8; ++j) {
        t.push_back(1.0 - 2.0 * j / 8.0);
        y.push_back(std::abs(t.back()));
    }
    double s1 = 0, st = 0, stt = 0, sy = 0, sty = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        s1 += 1;
        st += t[i];
        stt += t[i] * t[i];
        sy += y[i];
        sty += t[i] * y[i];
    }
    const double det = s1 * stt - st * st;
    const double a0 = (stt * sy - st * sty) / det;
    const double a1 = (s1 * sty - st * sy) / det;
    const auto c = chebyshev_least_squares(t, y, 1);
    EXPECT_NEAR(c[0], a0, 1e-13);
    EXPECT_NEAR(c[1], a1, 1e-13);
}

TEST(Chebyshev, NodesAreFirstKind) {
    const auto nodes = chebyshev_nodes(5);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        EXPECT_NEAR(nodes[j], std::cos(std::numbers::pi * (j + 0.5) / 5.0), 1e-15);
    }
}

TEST(Chebyshev, EffectiveDegreeIgnoresTrailingZeros) {
    const std::vector<double> c = {1.0, 0.5, 0.0, 1e-16};
    EXPECT_EQ(effective_degree(c), 3);
    EXPECT_EQ(effective_degree(c, 1e-13), 1);
    EXPECT_EQ(effective_degree(std::vector<double>{0.0}), -1);
}

TEST(Chebyshev, SegmentArgumentStartsAtOne) {
    EXPECT_EQ(segment_argument(0, 8), 1.0);
    EXPECT_EQ(segment_argument(4, 8), 0.0);
    EXPECT_EQ(segment_argument(7, 8), -0.75);
}

}  // namespace
}  // namespace pqsvt
