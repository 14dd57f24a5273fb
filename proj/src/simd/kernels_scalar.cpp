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

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

#include "pqsvt/simd/kernels.hpp"

namespace pqsvt::simd::scalar {

void chebyshev_eval(std::span<const double> coeffs, std::span<const double> t, std::span<double> out) {
    assert(t.size() == out.size());
    const std::size_t n = coeffs.size();
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (n == 0) {
            out[i] = 0.0;
            continue;
        }
        const double x = t[i];
        const double two_x = 2.0 * x;
        double b1 = 0.0;
        double b2 = 0.0;
        for (std::size_t k = n - 1; k >= 1; --k) {
            const double b0 = coeffs[k] + two_x * b1 - b2;
            b2 = b1;
            b1 = b0;
        }
        out[i] = coeffs[0] + x * b1 - b2;
    }
}

void qsvt_block_values(std::span<const double> phases, std::span<const double> t, std::span<double> out) {
    assert(t.size() == out.size());
    assert(!phases.empty());
    const std::size_t len = phases.size();
    std::vector<double> c(len);
    std::vector<double> s(len);
    for (std::size_t j = 0; j < len; ++j) {
        c[j] = std::cos(0.5 * phases[j]);
        s[j] = std::sin(0.5 * phases[j]);
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double x = std::clamp(t[i], -1.0, 1.0);
        const double y = std::sqrt(std::max(0.0, 1.0 - x * x));
        // Row vector <0| R_X(phi_0) = (c0, -i s0).
        double u0r = c[0];
        double u0i = 0.0;
        double u1r = 0.0;
        double u1i = -s[0];
        for (std::size_t j = 1; j < len; ++j) {
            if (j & 1) {
                // u0 *= e^{i theta}
                const double r = u0r * x - u0i * y;
                const double im = u0r * y + u0i * x;
                u0r = r;
                u0i = im;
            } else {
                // u1 *= e^{-i theta}
                const double r = u1r * x + u1i * y;
                const double im = u1i * x - u1r * y;
                u1r = r;
                u1i = im;
            }
            // (u0, u1) * [[c, -is], [-is, c]]
            const double n0r = c[j] * u0r + s[j] * u1i;
            const double n0i = c[j] * u0i - s[j] * u1r;
            const double n1r = c[j] * u1r + s[j] * u0i;
            const double n1i = c[j] * u1i - s[j] * u0r;
            u0r = n0r;
            u0i = n0i;
            u1r = n1r;
            u1i = n1i;
        }
        out[i] = u0r;
    }
}

double dot(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

}  // namespace pqsvt::simd::scalar
