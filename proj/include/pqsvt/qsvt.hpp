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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "pqsvt/encoding.hpp"
#include "pqsvt/plan.hpp"

namespace pqsvt {

// Indefinite-parity QSVT on a scalar signal t = cos(theta):
//
//   qsvt_scalar(phi, t) = Re <0| R_X(phi_0) A_1 R_X(phi_1) ... A_{2d} R_X(phi_{2d}) |0>
//
// with A_j = diag(e^{i theta}, 1) for odd j, diag(1, e^{-i theta}) for even j,
// and R_X(phi) = exp(-i phi X / 2). The real part is the average of the
// sequence at +theta and -theta, which is what the circuit produces when the
// block encoding is symmetrized over both walk eigenvalues. It is a real
// polynomial of degree at most d in t.
double qsvt_scalar(std::span<const double> phases, double t);

// Same sequence, full complex <0|...|0> at angle theta (not projected).
std::complex<double> qsvt_sequence_element(std::span<const double> phases, double theta);

inline constexpr double kDefaultPhaseTolerance = 1e-11;

struct PhaseSolveOptions {
    double margin = 1e-4;       // require max |p| <= 1 - margin on [-1, 1]
    int max_iterations = 400;   // Levenberg-Marquardt steps per attempt
    int restarts = 12;          // randomized restarts after the symmetric start
    std::uint64_t seed = 0x5eed;
};

struct PhaseSolution {
    std::vector<double> phases;  // 2d + 1 angles
    double residual = 0.0;       // max error over the 4d + 1 Chebyshev nodes
    int attempts = 0;
};

// Angles with max over 4d+1 Chebyshev nodes |qsvt_scalar(phi, t) - p(t)| <= tau,
// where p has Chebyshev coefficients `coeffs`. Throws std::invalid_argument if
// deg p > d or max |p| > 1 - margin, NumericError if no attempt converges.
PhaseSolution solve_phase_factors(std::span<const double> coeffs, int d, double tau = kDefaultPhaseTolerance,
                                  const PhaseSolveOptions& options = {});

struct PhaseFactorSet {
    int d = 0;
    std::vector<std::vector<double>> phases;  // one 2d+1 vector per segment

    friend bool operator==(const PhaseFactorSet&, const PhaseFactorSet&) = default;
};

// Solves every segment's implemented polynomial with a common degree d
// (default: the plan's max degree). Segments are solved in parallel.
PhaseFactorSet solve_plan_phases(const SegmentPlan& plan, int d = -1, double tau = kDefaultPhaseTolerance,
                                 const PhaseSolveOptions& options = {});

// Entry x = qsvt_scalar(phi_{s_x}, t_x).
std::vector<double> apply_piecewise_qsvt(const DiagonalBlockEncoding& be, const PhaseFactorSet& phases);

// Entry x = implemented polynomial of segment s_x evaluated at t_x directly.
std::vector<double> reference_transformed_diagonal(const SegmentPlan& plan,
                                                   EncodingRange range = EncodingRange::kSigned);

}  // namespace pqsvt
