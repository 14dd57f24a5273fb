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

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pqsvt/simd/kernels.hpp"

namespace pqsvt {

std::vector<double> chebyshev_nodes(std::size_t count) {
    std::vector<double> nodes(count);
    for (std::size_t j = 0; j < count; ++j) {
        nodes[j] = std::cos(std::numbers::pi * (static_cast<double>(j) + 0.5) / static_cast<double>(count));
    }
    return nodes;
}

double chebyshev_value(std::span<const double> coeffs, double t) {
    double out = 0.0;
    simd::scalar::chebyshev_eval(coeffs, std::span<const double>(&t, 1), std::span<double>(&out, 1));
    return out;
}

std::vector<double> chebyshev_values(std::span<const double> coeffs, std::span<const double> t) {
    std::vector<double> out(t.size());
    simd::chebyshev_eval(coeffs, t, out);
    return out;
}

std::vector<double> chebyshev_interpolate(const std::function<double(double)>& f, int degree) {
    if (degree < 0) throw std::invalid_argument("chebyshev_interpolate: degree must be >= 0");
    const std::size_t count = static_cast<std::size_t>(degree) + 1;
    std::vector<double> values(count);
    for (std::size_t j = 0; j < count; ++j) {
        const double theta = std::numbers::pi * (static_cast<double>(j) + 0.5) / static_cast<double>(count);
        values[j] = f(std::cos(theta));
    }
    std::vector<double> coeffs(count);
    for (std::size_t k = 0; k < count; ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j < count; ++j) {
            const double theta = std::numbers::pi * (static_cast<double>(j) + 0.5) / static_cast<double>(count);
            acc += values[j] * std::cos(static_cast<double>(k) * theta);
        }
        coeffs[k] = acc * (k == 0 ? 1.0 : 2.0) / static_cast<double>(count);
    }
    return coeffs;
}

std::vector<double> chebyshev_least_squares(std::span<const double> t, std::span<const double> y, int degree) {
    if (degree < 0) throw std::invalid_argument("chebyshev_least_squares: degree must be >= 0");
    if (t.size() != y.size()) throw std::invalid_argument("chebyshev_least_squares: size mismatch");
    const auto rows = static_cast<Eigen::Index>(t.size());
    const auto cols = static_cast<Eigen::Index>(degree) + 1;
    if (cols > rows) throw std::invalid_argument("chebyshev_least_squares: underdetermined fit");
    Eigen::MatrixXd basis(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const double x = t[static_cast<std::size_t>(r)];
        double prev = 1.0;
        double cur = x;
        basis(r, 0) = 1.0;
        if (cols > 1) basis(r, 1) = x;
        for (Eigen::Index c = 2; c < cols; ++c) {
            const double next = 2.0 * x * cur - prev;
            prev = cur;
            cur = next;
            basis(r, c) = next;
        }
    }
    const Eigen::Map<const Eigen::VectorXd> rhs(y.data(), rows);
    const Eigen::VectorXd sol = basis.colPivHouseholderQr().solve(rhs);
    return std::vector<double>(sol.data(), sol.data() + sol.size());
}

int effective_degree(std::span<const double> coeffs, double tol) {
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
        if (std::abs(coeffs[static_cast<std::size_t>(k)]) > tol) return k;
    }
    return -1;
}

}  // namespace pqsvt
