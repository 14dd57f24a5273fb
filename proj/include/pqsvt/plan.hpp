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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pqsvt {

// Fraction of the unit bound left free when rescaling fitted polynomials for
// QSVT. Implemented polynomials are kQsvtHeadroom * p~_i / p~_max, keeping
// |p_i| <= 1 - 2e-4 on [-1, 1], inside the phase solver's default margin.
inline constexpr double kQsvtHeadroom = 1.0 - 2e-4;

// One aligned power-of-two piece [start, start + length) with its fitted
// polynomial p~ in the local argument t = 1 - 2 (x mod length) / length.
struct Segment {
    std::int64_t start = 0;
    std::int64_t length = 1;
    int degree = 0;
    std::vector<double> coeffs;  // Chebyshev, size degree + 1
    double fit_error = 0.0;      // discrete L-infinity error of the fit

    std::int64_t end() const { return start + length; }
    int level() const;  // log2(length)
};

// A tiling of [0, 2^n) by aligned power-of-two segments. Also serves as the
// piecewise-polynomial representation of a target (PiecewisePolynomial).
struct SegmentPlan {
    int n = 1;
    std::vector<Segment> segments;
    double pmax = 0.0;  // continuous max of |p~| over all pieces

    std::int64_t size() const { return std::int64_t{1} << n; }
    std::size_t segment_count() const { return segments.size(); }
    int l_max() const;
    int max_degree() const;
    std::size_t unique_sizes() const;

    // Index of the segment containing x.
    std::size_t segment_of(std::int64_t x) const;

    // Throws std::invalid_argument unless segments tile [0, 2^n) in order with
    // power-of-two lengths and aligned starts, and coefficient counts match.
    void validate() const;

    // Chebyshev coefficients of the polynomial actually applied by QSVT.
    std::vector<double> implemented_coeffs(std::size_t s) const;
};

using PiecewisePolynomial = SegmentPlan;

bool is_power_of_two(std::int64_t v);
int floor_log2(std::int64_t v);

// Plan with the given segment levels (lengths 2^level), laid out left to right,
// each carrying the constant polynomial 1. Throws if the layout is invalid.
SegmentPlan plan_from_levels(int n, std::span<const int> levels);

// p~_{s_x}(t_x) for every x: the fitted (unscaled) piecewise polynomial.
std::vector<double> evaluate_fitted(const SegmentPlan& plan);

}  // namespace pqsvt
