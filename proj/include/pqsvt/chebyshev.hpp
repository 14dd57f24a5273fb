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
#include <functional>
#include <span>
#include <vector>

namespace pqsvt {

// Polynomials are stored as Chebyshev coefficients c_k on t in [-1, 1]:
// p(t) = sum_k c_k T_k(t).

// First-kind Chebyshev nodes cos(pi (j + 1/2) / count), j = 0..count-1.
std::vector<double> chebyshev_nodes(std::size_t count);

double chebyshev_value(std::span<const double> coeffs, double t);

std::vector<double> chebyshev_values(std::span<const double> coeffs, std::span<const double> t);

// Interpolant of f at degree+1 first-kind nodes.
std::vector<double> chebyshev_interpolate(const std::function<double(double)>& f, int degree);

// Least-squares fit of degree `degree` to (t, y). Requires degree + 1 <= t.size().
std::vector<double> chebyshev_least_squares(std::span<const double> t, std::span<const double> y, int degree);

// Local block-encoding argument for offset j inside a segment of length L:
// t = 1 - 2 j / L. Exact in binary floating point because L is a power of two.
inline double segment_argument(std::int64_t offset, std::int64_t length) {
    return 1.0 - 2.0 * static_cast<double>(offset) / static_cast<double>(length);
}

// Trailing effective degree (highest k with |c_k| > tol), or -1 for the zero polynomial.
int effective_degree(std::span<const double> coeffs, double tol = 0.0);

}  // namespace pqsvt
