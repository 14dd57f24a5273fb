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

// Hand-rolled generators shared by the unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "pqsvt/plan.hpp"
#include "pqsvt/segmentation.hpp"

namespace pqsvt::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Random aligned dyadic tiling of [0, 2^n) into at most max_segments pieces,
// returned as segment levels in ascending order.
inline std::vector<int> random_levels(Rng& rng, int n, std::size_t max_segments) {
    // Each split replaces one piece with two halves.
    std::vector<std::pair<std::int64_t, int>> pieces = {{0, n}};
    const int splits = uniform_int(rng, 0, static_cast<int>(max_segments) - 1);
    for (int s = 0; s < splits; ++s) {
        std::vector<std::size_t> splittable;
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            if (pieces[i].second > 0) splittable.push_back(i);
        }
        if (splittable.empty()) break;
        const std::size_t pick = splittable[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(splittable.size()) - 1))];
        const auto [start, level] = pieces[pick];
        pieces[pick] = {start, level - 1};
        pieces.push_back({start + (std::int64_t{1} << (level - 1)), level - 1});
    }
    std::sort(pieces.begin(), pieces.end());
    std::vector<int> levels;
    for (const auto& p : pieces) levels.push_back(p.second);
    return levels;
}

// Random Chebyshev coefficients with geometrically decaying magnitude.
inline std::vector<double> random_coeffs(Rng& rng, int degree) {
    std::vector<double> c(static_cast<std::size_t>(degree) + 1);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = uniform(rng, -1.0, 1.0) / (1.0 + 0.5 * static_cast<double>(k));
    return c;
}

// Plan with random tiling and random polynomials of degree exactly `degree`
// per segment (well, up to cancellation).
inline SegmentPlan random_plan(Rng& rng, int n, std::size_t max_segments, int degree) {
    const std::vector<int> levels = random_levels(rng, n, max_segments);
    SegmentPlan plan = plan_from_levels(n, levels);
    for (auto& s : plan.segments) {
        s.degree = degree;
        s.coeffs = random_coeffs(rng, degree);
    }
    plan.pmax = continuous_pmax(plan);
    return plan;
}

// Samples of a random piecewise polynomial on a random dyadic tiling, each
// piece evaluated in its local argument.
struct PiecewiseSamples {
    std::vector<double> samples;
    std::vector<int> levels;
};

inline PiecewiseSamples random_piecewise_samples(Rng& rng, int n, std::size_t max_segments, int degree) {
    PiecewiseSamples out;
    out.levels = random_levels(rng, n, max_segments);
    std::int64_t start = 0;
    out.samples.resize(std::size_t{1} << n);
    for (int level : out.levels) {
        const std::int64_t L = std::int64_t{1} << level;
        const std::vector<double> c = random_coeffs(rng, degree);
        for (std::int64_t r = 0; r < L; ++r) {
            const double t = 1.0 - 2.0 * static_cast<double>(r) / static_cast<double>(L);
            double v = 0.0;
            for (std::size_t k = 0; k < c.size(); ++k) v += c[k] * std::cos(static_cast<double>(k) * std::acos(t));
            out.samples[static_cast<std::size_t>(start + r)] = v;
        }
        start += L;
    }
    return out;
}

// Exhaustive minimum number of aligned dyadic segments whose fits all meet
// eps. Any aligned tiling is a binary tree over dyadic intervals, so the
// minimum is 1 if the interval fits, else the sum over its two halves.
inline std::size_t brute_force_min_segments(const std::vector<double>& samples, std::int64_t start, std::int64_t length,
                                            int degree, double eps) {
    const PolyFit fit = err_poly_approx(
        std::span<const double>(samples).subspan(static_cast<std::size_t>(start), static_cast<std::size_t>(length)),
        degree);
    if (fit.err <= eps) return 1;
    if (length == 1) return static_cast<std::size_t>(-1) / 4;
    const std::int64_t half = length / 2;
    return brute_force_min_segments(samples, start, half, degree, eps) +
           brute_force_min_segments(samples, start + half, half, degree, eps);
}

}  // namespace pqsvt::testing
