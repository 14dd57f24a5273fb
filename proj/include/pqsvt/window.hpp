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
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pqsvt {

// Windowed phase estimation. Eigenphase offsets E and confidence half-widths
// are measured in grid bins of the l-qubit register.

enum class WindowFamily { kRect, kKaiser, kBspline };

struct Window {
    WindowFamily family = WindowFamily::kRect;
    double beta = 0.0;  // Kaiser shape
    int m = 1;          // B-spline order

    static Window rect() { return {}; }
    static Window kaiser(double beta) { return {WindowFamily::kKaiser, beta, 1}; }
    static Window bspline(int m) { return {WindowFamily::kBspline, 0.0, m}; }
    std::string name() const;
};

std::string family_name(WindowFamily family);

// Probabilities over k in (-2^{l-1}, 2^{l-1}]; probs[i] belongs to k = k_min + i.
struct QpeDistribution {
    std::int64_t k_min = 0;
    std::vector<double> probs;

    std::int64_t k_of(std::size_t i) const { return k_min + static_cast<std::int64_t>(i); }
    double at(std::int64_t k) const { return probs.at(static_cast<std::size_t>(k - k_min)); }
};

// B-spline: sinc((k - E) pi / m)^{2m}, normalized over the register.
// Rect and Kaiser: squared DFT of the sampled window modulated by E.
QpeDistribution qpe_distribution(const Window& window, int l, double E);

// Squared DFT of the sampled window for every family; for B-splines the
// samples are M_m(j m / 2^l).
QpeDistribution qpe_distribution_dft(const Window& window, int l, double E);

// Max |closed form - sampled DFT| for a B-spline window.
double bspline_discretization_gap(int m, int l, double E);

struct Normalization {
    double exact = 0.0;   // sqrt of sum_k sinc((k - E) pi / m)^{2m}
    double approx = 0.0;  // (3m / pi)^{1/4}
    double relative_gap() const { return exact / approx - 1.0; }
};

Normalization bspline_normalization(int m, int l, double E = 0.0);

// Mass of the distribution with |k - E| > confidence.
double tail_probability(const Window& window, int l, double E, double confidence);

// (2 / N^2) (m / (2m - 1)) pi^{-2m} with N the exact normalization at l.
double bspline_tail_bound(int m, int l);

// Same tail for an unbounded register, from the continuum transform of the
// window: sinc^{2m} for B-splines (rect is m = 1) and, for Kaiser,
// sinh^2(sqrt(beta^2 - pi^2 v^2)) / (beta^2 - pi^2 v^2). Accepts any real
// confidence, so fractional register sizes can be scanned.
double tail_probability_unbounded(const Window& window, double E, double confidence);

// Worst case of tail_probability_unbounded over E in {0, 1/16, ..., 1/2}.
double worst_case_tail(const Window& window, double confidence);

struct BestWindow {
    Window window;
    double delta = 1.0;
};

// Rect: m = 1. B-spline: m over powers of two up to twice the confidence.
// Kaiser: beta over a geometric grid, refined by Brent's method.
BestWindow best_window(WindowFamily family, double confidence);

// Hurwitz zeta q^s zeta(s, q) = sum_j (q / (q + j))^s for s > 1, q > 0.
double hurwitz_zeta_scaled(double s, double q);

struct AncillaRequirement {
    double extra = 0.0;  // e, possibly fractional
    int l = 0;           // ceil(log2(1/eps) + e)
    BestWindow best;
    bool feasible = false;
};

inline constexpr double kMaxExtraAncillas = 48.0;

// Smallest e with best_window(family, 2^e).delta <= delta_target; the
// confidence 2^e bins of an l = log2(1/eps_confidence) + e register equals
// eps_confidence. Infeasible results carry feasible = false.
AncillaRequirement extra_ancillas_needed(WindowFamily family, double delta_target, double eps_confidence);

struct WindowCostComparison {
    int extra_ancillas = 0;
    int base_qubits = 0;
    std::int64_t log_inv_eps = 0;
    // B-spline: m = 2^e equal segments of degree m - 1.
    int bspline_m = 1;
    int bspline_aa_rounds = 0;
    std::int64_t bspline_toffoli = 0;
    // Kaiser proxy: one segment, degree fitted to 2^-log_inv_eps.
    double kaiser_beta = 0.0;
    int kaiser_degree = 0;
    double kaiser_fit_error = 0.0;
    int kaiser_aa_rounds = 0;
    std::int64_t kaiser_toffoli = 0;
    double ratio = 0.0;  // kaiser / bspline; infinite when the B-spline costs nothing
};

inline constexpr std::int64_t kWindowCostLogInvEps = 20;
inline constexpr int kMaxKaiserDegree = 2048;

// Throws NumericError if the Kaiser fit does not reach the tolerance below
// kMaxKaiserDegree.
WindowCostComparison window_prep_cost_comparison(int extra_ancillas, int base_qubits,
                                                 std::int64_t log_inv_eps = kWindowCostLogInvEps);

// Minimal Chebyshev degree approximating I0(beta sqrt(1 - t^2)) / I0(beta) on
// [-1, 1] within tol; returns {degree, achieved error}.
std::pair<int, double> kaiser_chebyshev_degree(double beta, double tol);

// Continuum success amplitude of a window loaded with peak value 1.
double bspline_success_amplitude(int m);
double kaiser_success_amplitude(double beta);

inline constexpr int kFig6BaseQubits = 10;
inline constexpr int kFig7BaseQubits = 25;

// delta_target,window,extra_ancillas
void write_fig6_csv(std::ostream& os, std::span<const double> delta_targets, int base_qubits);
// extra_ancillas,window,toffoli,ratio
void write_fig7_csv(std::ostream& os, std::span<const int> extra_ancillas, int base_qubits);

}  // namespace pqsvt
