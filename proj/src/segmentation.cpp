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

#include "pqsvt/segmentation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pqsvt/chebyshev.hpp"
#include "pqsvt/errors.hpp"

namespace pqsvt {

PolyFit err_poly_approx(std::span<const double> samples, int degree) {
    if (samples.empty()) throw std::invalid_argument("err_poly_approx: no samples");
    if (degree < 0) throw std::invalid_argument("err_poly_approx: degree must be >= 0");
    const auto L = static_cast<std::int64_t>(samples.size());
    const int fit_degree = static_cast<int>(std::min<std::int64_t>(degree, L - 1));

    std::vector<double> t(samples.size());
    for (std::int64_t j = 0; j < L; ++j) t[static_cast<std::size_t>(j)] = segment_argument(j, L);

    PolyFit fit;
    if (fit_degree == 0) {
        double mean = 0.0;
        for (double v : samples) mean += v;
        fit.coeffs = {mean / static_cast<double>(L)};
    } else {
        fit.coeffs = chebyshev_least_squares(t, samples, fit_degree);
    }
    fit.coeffs.resize(static_cast<std::size_t>(degree) + 1, 0.0);

    const auto values = chebyshev_values(fit.coeffs, t);
    double err = 0.0;
    for (std::size_t j = 0; j < samples.size(); ++j) {
        const double e = std::abs(values[j] - samples[j]);
        if (std::isnan(e)) {
            err = e;
            break;
        }
        err = std::max(err, e);
    }
    fit.err = err;
    return fit;
}

SegmentPlan optimal_cuts(std::span<const double> samples, int degree, double eps, CutStats* stats) {
    const auto N = static_cast<std::int64_t>(samples.size());
    if (!is_power_of_two(N) || N < 2) throw std::invalid_argument("optimal_cuts: sample count must be 2^n with n >= 1");
    if (!(eps > 0.0)) throw std::invalid_argument("optimal_cuts: eps must be positive");
    if (degree < 0) throw std::invalid_argument("optimal_cuts: degree must be >= 0");

    std::size_t queries = 0;
    std::vector<Segment> reversed;
    std::int64_t rhs = N;
    while (rhs > 0) {
        const std::int64_t step = std::int64_t{1} << std::countr_zero(static_cast<std::uint64_t>(rhs));
        std::int64_t lhs = std::max<std::int64_t>(rhs - step, 0);
        for (;;) {
            PolyFit fit = err_poly_approx(samples.subspan(static_cast<std::size_t>(lhs), static_cast<std::size_t>(rhs - lhs)),
                                          degree);
            ++queries;
            if (fit.err <= eps) {
                Segment s;
                s.start = lhs;
                s.length = rhs - lhs;
                s.degree = degree;
                s.coeffs = std::move(fit.coeffs);
                s.fit_error = fit.err;
                reversed.push_back(std::move(s));
                break;
            }
            if (rhs - lhs == 1) {
                throw InfeasibleError("optimal_cuts: single sample at x = " + std::to_string(lhs) +
                                      " cannot be fit within eps");
            }
            lhs = (lhs + rhs) / 2;
        }
        rhs = lhs;
    }
    if (stats) stats->queries = queries;

    SegmentPlan plan;
    plan.n = std::countr_zero(static_cast<std::uint64_t>(N));
    plan.segments.assign(reversed.rbegin(), reversed.rend());
    plan.pmax = continuous_pmax(plan);
    plan.validate();
    return plan;
}

namespace {

Segment fit_segment(std::span<const double> amplitudes, std::int64_t start, std::int64_t length, int degree) {
    PolyFit fit = err_poly_approx(amplitudes.subspan(static_cast<std::size_t>(start), static_cast<std::size_t>(length)),
                                  degree);
    Segment s;
    s.start = start;
    s.length = length;
    s.degree = degree;
    s.coeffs = std::move(fit.coeffs);
    s.fit_error = fit.err;
    return s;
}

}  // namespace

SegmentPlan dyadic_cascade_plan(const TargetSpec& spec, int degree) {
    if (degree < 0) throw std::invalid_argument("dyadic_cascade_plan: degree must be >= 0");
    const bool is_power = std::holds_alternative<PowerTarget>(spec.kind);
    const bool is_log = std::holds_alternative<LogTarget>(spec.kind);
    if (!is_power && !is_log) {
        throw std::invalid_argument("dyadic_cascade_plan: only power and log targets have a dyadic cascade");
    }
    const AmplitudeVector target = sample_target(spec);
    const std::span<const double> amps(target.values);
    const int n = spec.n;
    const std::int64_t N = spec.size();

    SegmentPlan plan;
    plan.n = n;
    if (is_power) {
        Segment bottom;
        bottom.start = 0;
        bottom.length = 1;
        bottom.degree = 0;
        bottom.coeffs = {0.0};
        bottom.fit_error = std::abs(amps[0]);
        plan.segments.push_back(bottom);
        for (int i = n - 1; i >= 0; --i) {
            const std::int64_t length = std::int64_t{1} << (n - i - 1);
            plan.segments.push_back(fit_segment(amps, length, length, degree));
        }
    } else {
        if (n < 2) throw std::invalid_argument("dyadic_cascade_plan: log cascade needs n >= 2");
        plan.segments.push_back(fit_segment(amps, 0, 2, std::max(degree, 1)));
        plan.segments.back().degree = std::max(degree, 1);
        for (int i = n - 2; i >= 0; --i) {
            const std::int64_t quarter = N >> (i + 2);
            plan.segments.push_back(fit_segment(amps, 2 * quarter, quarter, degree));
            plan.segments.push_back(fit_segment(amps, 3 * quarter, quarter, degree));
        }
    }
    plan.pmax = continuous_pmax(plan);
    plan.validate();
    return plan;
}

double continuous_pmax(const SegmentPlan& plan, int grid_per_segment) {
    if (grid_per_segment < 64) throw std::invalid_argument("continuous_pmax: grid must have at least 64 nodes");
    std::vector<double> grid = chebyshev_nodes(static_cast<std::size_t>(grid_per_segment));
    grid.push_back(1.0);
    grid.push_back(-1.0);
    double best = 0.0;
    for (const auto& s : plan.segments) {
        for (double v : chebyshev_values(s.coeffs, grid)) best = std::max(best, std::abs(v));
    }
    return best;
}

}  // namespace pqsvt
