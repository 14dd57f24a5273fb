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

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "pqsvt/plan.hpp"

namespace pqsvt {

/// (x / N)^alpha.
struct PowerTarget {
    double alpha = 0.5;
};

/// log(x / N) for x >= 1; the x = 0 amplitude is set to 0.
struct LogTarget {};

/// m-fold self-convolution of the rectangular window over the whole register,
/// sampled through its truncated-power representation.
struct BsplineTarget {
    int m = 1;
};

/// I0(beta sqrt(1 - (2x/(N-1) - 1)^2)) / I0(beta), the usual signal-processing
/// Kaiser window.
struct KaiserTarget {
    double beta = 0.0;
};

/// Arbitrary real samples, one per basis state.
struct CustomTarget {
    std::vector<double> samples;
};

using TargetKind = std::variant<PowerTarget, LogTarget, BsplineTarget, KaiserTarget, CustomTarget>;

struct TargetSpec {
    TargetKind kind;
    int n = 1;  // qubits; N = 2^n

    std::int64_t size() const { return std::int64_t{1} << n; }
    std::string kind_name() const;
    void validate() const;  // throws std::invalid_argument
};

/// Unit-L2 amplitudes and the factor they were divided by.
struct AmplitudeVector {
    std::vector<double> values;
    double norm = 1.0;
};

AmplitudeVector normalize_amplitudes(std::vector<double> raw);

AmplitudeVector sample_target(const TargetSpec& spec);

/// Unnormalized B-spline sample at index x of an N-point register, computed
/// exactly in integer arithmetic from the alternating truncated-power sum
/// sum_p (-1)^p C(m,p) (x m - p N)_+^{m-1}, then rounded once to double.
/// The value is proportional to M_m(x m / N) with a factor independent of x.
double bspline_truncated_power_sum(int m, std::int64_t x, std::int64_t N);

/// Cardinal B-spline M_m(u) supported on [0, m], by the Cox-de Boor recursion
/// (equivalently, repeated convolution with the unit box). Integrates to 1.
double cardinal_bspline(int m, double u);

/// Exact piecewise representation of the B-spline window: m equal segments of
/// length N/m, each a degree-(m-1) Chebyshev series in t, scaled so that the
/// pieces evaluated at the sample points reproduce sample_target(bspline).
/// pmax is set from the continuous maximum. Requires m a power of two,
/// 1 <= m <= 32 and m <= 2^n.
PiecewisePolynomial bspline_piecewise_coefficients(int m, int n);

std::vector<double> kaiser_samples(double beta, std::int64_t count);

}  // namespace pqsvt
