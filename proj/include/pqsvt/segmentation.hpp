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
#include <span>
#include <vector>

#include "pqsvt/amplitudes.hpp"
#include "pqsvt/plan.hpp"

namespace pqsvt {

inline constexpr int kDefaultPmaxGrid = 256;

struct PolyFit {
    std::vector<double> coeffs;  // Chebyshev in t, size degree + 1
    double err = 0.0;            // max |fit(t_x) - sample_x| over the samples
};

// Least-squares fit in the Chebyshev basis at t_x = 1 - 2 x / L, L = samples.size().
// When degree + 1 >= L the fit interpolates; trailing coefficients are zero.
PolyFit err_poly_approx(std::span<const double> samples, int degree);

struct CutStats {
    std::size_t queries = 0;  // calls to err_poly_approx
};

// Greedy right-to-left segmentation: from each right boundary take the largest
// aligned power-of-two segment whose fit error is <= eps, halving on failure.
// Produces the fewest segments among aligned power-of-two tilings. Throws
// InfeasibleError if a single sample cannot be fit (non-finite input).
SegmentPlan optimal_cuts(std::span<const double> samples, int degree, double eps, CutStats* stats = nullptr);

// Dyadic cascade toward the singularity at x = 0.
//   power: n pieces [2^{n-i-1}, 2^{n-i}) plus the constant-zero piece [0, 1).
//   log:   2(n-1) pieces splitting each [2^{-i-1}, 2^{-i}] at 3 * 2^{-i-2}, plus
//          an exact degree-1 piece on x in {0, 1}.
// Fitted to sample_target(spec) with err_poly_approx; pmax is set.
SegmentPlan dyadic_cascade_plan(const TargetSpec& spec, int degree);

// max over segments of max |p~_i(t)| on grid_per_segment first-kind Chebyshev
// nodes plus t = +-1.
double continuous_pmax(const SegmentPlan& plan, int grid_per_segment = kDefaultPmaxGrid);

}  // namespace pqsvt
