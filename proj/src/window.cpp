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

#include "pqsvt/window.hpp"

#include <fftw3.h>
#include <fmt/format.h>

#include <algorithm>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "pqsvt/amplitudes.hpp"
#include "pqsvt/chebyshev.hpp"
#include "pqsvt/cost.hpp"
#include "pqsvt/errors.hpp"
#include "pqsvt/parallel.hpp"
#include "pqsvt/prep.hpp"

namespace pqsvt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxRegisterQubits = 24;
constexpr int kMaxUnboundedBsplineOrder = 1024;

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

void check_register(int l) {
    if (l < 2 || l > kMaxRegisterQubits) throw std::invalid_argument("window: l must be in [2, 24]");
}

void check_window(const Window& w) {
    if (w.family == WindowFamily::kBspline && w.m < 1) throw std::invalid_argument("window: B-spline order must be >= 1");
    if (w.family == WindowFamily::kKaiser && !(w.beta >= 0.0)) throw std::invalid_argument("window: beta must be >= 0");
}

void normalize(std::vector<double>& p) {
    double total = 0.0;
    for (double v : p) total += v;
    for (double& v : p) v /= total;
}

std::vector<double> window_samples(const Window& w, std::int64_t L) {
    switch (w.family) {
        case WindowFamily::kRect:
            return std::vector<double>(static_cast<std::size_t>(L), 1.0);
        case WindowFamily::kKaiser:
            return kaiser_samples(w.beta, L);
        case WindowFamily::kBspline: {
            std::vector<double> out(static_cast<std::size_t>(L));
            for (std::int64_t j = 0; j < L; ++j) {
                out[static_cast<std::size_t>(j)] =
                    cardinal_bspline(w.m, static_cast<double>(j) * w.m / static_cast<double>(L));
            }
            return out;
        }
    }
    throw std::invalid_argument("window: unknown family");
}

// The FFTW planner is not thread-safe.
std::mutex& fftw_planner_mutex() {
    static std::mutex mu;
    return mu;
}

// log(sinh(a) / a) for a >= 0.
double log_sinhc(double a) {
    if (a < 1e-4) return a * a / 6.0;
    return a + std::log1p(-std::exp(-2.0 * a)) - std::log(2.0 * a);
}

// Kaiser continuum transform at v bins, divided by its value at 0.
double kaiser_amplitude(double beta, double v) {
    const double u = kPi * std::abs(v);
    const double peak = log_sinhc(beta);
    if (u < beta) return std::exp(log_sinhc(std::sqrt(beta * beta - u * u)) - peak);
    const double b = std::sqrt(u * u - beta * beta);
    return sinc(b) * std::exp(-peak);
}

// sum_{k integer, k - E > c} |kaiser_amplitude(k - E)|^2.
double kaiser_right_tail(double beta, double E, double c) {
    const double k0 = std::floor(c + E) + 1.0;
    const double explicit_terms = 256.0 + std::ceil(std::max(0.0, beta / kPi - c));
    double sum = 0.0;
    for (double j = 0; j < explicit_terms; j += 1.0) {
        const double a = kaiser_amplitude(beta, k0 + j - E);
        sum += a * a;
    }
    // Past the main lobe, sin^2(sqrt(pi^2 v^2 - beta^2)) at v = k - E equals
    // sin^2(pi E + phi(v)) with phi smooth, so Euler-Maclaurin applies.
    const double scale = std::exp(-2.0 * log_sinhc(beta));
    auto h = [&](double v) {
        const double u = kPi * v;
        const double b = std::sqrt(u * u - beta * beta);
        const double phi = beta * beta / (u + b);
        const double s = std::sin(kPi * E + phi);
        return s * s / (b * b) * scale;
    };
    const double K = k0 + explicit_terms - E;
    boost::math::quadrature::exp_sinh<double> integrator;
    const double integral = integrator.integrate([&](double y) { return h(K + y); });
    const double step = 1e-3 * K;
    const double derivative = (h(K + step) - h(K - step)) / (2.0 * step);
    return sum + integral + 0.5 * h(K) - derivative / 12.0;
}

double kaiser_center(double beta, double E, double c) {
    double sum = 0.0;
    const auto lo = static_cast<std::int64_t>(std::ceil(E - c));
    const auto hi = static_cast<std::int64_t>(std::floor(E + c));
    for (std::int64_t k = lo; k <= hi; ++k) {
        const double a = kaiser_amplitude(beta, static_cast<double>(k) - E);
        sum += a * a;
    }
    return sum;
}

// sum_{k integer, k - E > c} sinc((k - E) pi / m)^{2m}, grouped by residue
// class of k mod m so each class is a Hurwitz zeta series.
double bspline_right_tail(int m, double E, double c) {
    const double k0 = std::floor(c + E) + 1.0;
    const double s = 2.0 * m;
    double sum = 0.0;
    for (int i = 0; i < m; ++i) {
        const double x = k0 + i - E;
        const double sn = std::sin(kPi * x / m);
        const double envelope = std::pow(m / (kPi * x), s);
        if (envelope == 0.0 || sn == 0.0) continue;
        sum += std::pow(sn * sn, m) * envelope * hurwitz_zeta_scaled(s, x / m);
    }
    return sum;
}

// sum_k sinc((k - E) pi / m)^{2m} over all integers k: by Poisson summation
// this is m times the integral of sinc^{2m}, i.e. m M_{2m}(m), for every E.
double bspline_total(int m) {
    static std::mutex mu;
    static std::map<int, double> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    const double total = m * cardinal_bspline(2 * m, static_cast<double>(m));
    cache.emplace(m, total);
    return total;
}

}  // namespace

std::string family_name(WindowFamily family) {
    switch (family) {
        case WindowFamily::kRect:
            return "rect";
        case WindowFamily::kKaiser:
            return "kaiser";
        case WindowFamily::kBspline:
            return "bspline";
    }
    return "unknown";
}

std::string Window::name() const {
    switch (family) {
        case WindowFamily::kRect:
            return "rect";
        case WindowFamily::kKaiser:
            return fmt::format("kaiser({})", beta);
        case WindowFamily::kBspline:
            return fmt::format("bspline({})", m);
    }
    return "unknown";
}

QpeDistribution qpe_distribution(const Window& window, int l, double E) {
    check_register(l);
    check_window(window);
    if (window.family != WindowFamily::kBspline) return qpe_distribution_dft(window, l, E);
    const std::int64_t L = std::int64_t{1} << l;
    QpeDistribution dist;
    dist.k_min = -L / 2 + 1;
    dist.probs.resize(static_cast<std::size_t>(L));
    for (std::size_t i = 0; i < dist.probs.size(); ++i) {
        const double v = (static_cast<double>(dist.k_of(i)) - E) * kPi / window.m;
        dist.probs[i] = std::pow(sinc(v), 2 * window.m);
    }
    normalize(dist.probs);
    return dist;
}

QpeDistribution qpe_distribution_dft(const Window& window, int l, double E) {
    check_register(l);
    check_window(window);
    const std::int64_t L = std::int64_t{1} << l;
    const std::vector<double> w = window_samples(window, L);
    auto* buf = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * static_cast<std::size_t>(L)));
    if (buf == nullptr) throw std::bad_alloc();
    for (std::int64_t j = 0; j < L; ++j) {
        // Register value x = j - L/2 + 1 carries phase e^{2 pi i x E / L}.
        const double x = static_cast<double>(j - L / 2 + 1);
        const std::complex<double> a = w[static_cast<std::size_t>(j)] * std::polar(1.0, 2.0 * kPi * x * E / static_cast<double>(L));
        buf[j][0] = a.real();
        buf[j][1] = a.imag();
    }
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(L), buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }
    QpeDistribution dist;
    dist.k_min = -L / 2 + 1;
    dist.probs.resize(static_cast<std::size_t>(L));
    for (std::size_t i = 0; i < dist.probs.size(); ++i) {
        const std::int64_t k = ((dist.k_of(i) % L) + L) % L;
        dist.probs[i] = buf[k][0] * buf[k][0] + buf[k][1] * buf[k][1];
    }
    fftw_free(buf);
    normalize(dist.probs);
    return dist;
}

double bspline_discretization_gap(int m, int l, double E) {
    const QpeDistribution closed = qpe_distribution(Window::bspline(m), l, E);
    const QpeDistribution sampled = qpe_distribution_dft(Window::bspline(m), l, E);
    double gap = 0.0;
    for (std::size_t i = 0; i < closed.probs.size(); ++i) {
        gap = std::max(gap, std::abs(closed.probs[i] - sampled.probs[i]));
    }
    return gap;
}

Normalization bspline_normalization(int m, int l, double E) {
    if (m < 1) throw std::invalid_argument("bspline_normalization: m must be >= 1");
    check_register(l);
    const std::int64_t L = std::int64_t{1} << l;
    double sum = 0.0;
    for (std::int64_t k = -L / 2 + 1; k <= L / 2; ++k) sum += std::pow(sinc((static_cast<double>(k) - E) * kPi / m), 2 * m);
    return Normalization{std::sqrt(sum), std::pow(3.0 * m / kPi, 0.25)};
}

double tail_probability(const Window& window, int l, double E, double confidence) {
    if (!(confidence > 0.0)) throw std::invalid_argument("tail_probability: confidence must be positive");
    const QpeDistribution dist = qpe_distribution(window, l, E);
    double tail = 0.0;
    for (std::size_t i = 0; i < dist.probs.size(); ++i) {
        if (std::abs(static_cast<double>(dist.k_of(i)) - E) > confidence) tail += dist.probs[i];
    }
    return tail;
}

double bspline_tail_bound(int m, int l) {
    const double norm = bspline_normalization(m, l).exact;
    return 2.0 / (norm * norm) * (m / (2.0 * m - 1.0)) * std::pow(kPi, -2.0 * m);
}

double hurwitz_zeta_scaled(double s, double q) {
    if (!(s > 1.0) || !(q > 0.0)) throw std::invalid_argument("hurwitz_zeta_scaled: need s > 1 and q > 0");
    auto term = [&](double j) { return std::exp(-s * std::log1p(j / q)); };
    if (s > 16.0) {
        // Terms fall off at least like (1 + j/q)^-16; sum until negligible.
        double sum = 0.0;
        for (double j = 0;; j += 1.0) {
            const double t = term(j);
            sum += t;
            if (t < 1e-18 * sum) {
                // Remainder bounded by the integral of the next terms.
                return sum + q * std::exp(-(s - 1.0) * std::log1p((j + 1.0) / q)) / (s - 1.0);
            }
        }
    }
    // Euler-Maclaurin with J explicit terms and Bernoulli corrections.
    constexpr int J = 64;
    static constexpr double kBernoulliOverFactorial[] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0,
                                                         1.0 / 47900160.0};
    double sum = 0.0;
    for (int j = 0; j < J; ++j) sum += term(j);
    const double a = q + J;
    const double base = std::exp(s * std::log(q / a));  // (q / a)^s
    sum += base * a / (s - 1.0) + 0.5 * base;
    double rising = s;  // s (s+1) ... (s + 2k - 2)
    double power = base / a;
    for (int k = 0; k < 5; ++k) {
        sum += kBernoulliOverFactorial[k] * rising * power;
        rising *= (s + 2 * k + 1) * (s + 2 * k + 2);
        power /= a * a;
    }
    return sum;
}

double tail_probability_unbounded(const Window& window, double E, double confidence) {
    check_window(window);
    if (!(confidence > 0.0)) throw std::invalid_argument("tail_probability_unbounded: confidence must be positive");
    switch (window.family) {
        case WindowFamily::kRect:
            return tail_probability_unbounded(Window::bspline(1), E, confidence);
        case WindowFamily::kBspline: {
            if (window.m > kMaxUnboundedBsplineOrder) {
                throw std::invalid_argument("tail_probability_unbounded: B-spline order too large");
            }
            const double tail =
                bspline_right_tail(window.m, E, confidence) + bspline_right_tail(window.m, -E, confidence);
            return std::clamp(tail / bspline_total(window.m), 0.0, 1.0);
        }
        case WindowFamily::kKaiser: {
            const double tail =
                kaiser_right_tail(window.beta, E, confidence) + kaiser_right_tail(window.beta, -E, confidence);
            const double center = kaiser_center(window.beta, E, confidence);
            return std::clamp(tail / (tail + center), 0.0, 1.0);
        }
    }
    throw std::invalid_argument("tail_probability_unbounded: unknown family");
}

double worst_case_tail(const Window& window, double confidence) {
    double worst = 0.0;
    for (int i = 0; i <= 8; ++i) worst = std::max(worst, tail_probability_unbounded(window, i / 16.0, confidence));
    return worst;
}

BestWindow best_window(WindowFamily family, double confidence) {
    if (!(confidence > 0.0)) throw std::invalid_argument("best_window: confidence must be positive");
    switch (family) {
        case WindowFamily::kRect:
            return BestWindow{Window::rect(), worst_case_tail(Window::rect(), confidence)};
        case WindowFamily::kBspline: {
            BestWindow best{Window::bspline(1), worst_case_tail(Window::bspline(1), confidence)};
            for (int m = 2; m <= kMaxUnboundedBsplineOrder && m <= 2.0 * confidence; m *= 2) {
                const double delta = worst_case_tail(Window::bspline(m), confidence);
                if (delta < best.delta) best = BestWindow{Window::bspline(m), delta};
            }
            return best;
        }
        case WindowFamily::kKaiser: {
            constexpr int kGrid = 40;
            const double lo = 0.05;
            const double hi = kPi * (confidence + 2.0);
            const double ratio = std::pow(hi / lo, 1.0 / (kGrid - 1));
            auto objective = [&](double log_beta) {
                return std::log(worst_case_tail(Window::kaiser(std::exp(log_beta)), confidence) + 1e-300);
            };
            int best_i = 0;
            double best_value = std::numeric_limits<double>::infinity();
            for (int i = 0; i < kGrid; ++i) {
                const double v = objective(std::log(lo * std::pow(ratio, i)));
                if (v < best_value) {
                    best_value = v;
                    best_i = i;
                }
            }
            const double a = std::log(lo * std::pow(ratio, std::max(0, best_i - 1)));
            const double b = std::log(lo * std::pow(ratio, std::min(kGrid - 1, best_i + 1)));
            std::uintmax_t iterations = 60;
            const auto [log_beta, value] = boost::math::tools::brent_find_minima(objective, a, b, 30, iterations);
            const double beta = value < best_value ? std::exp(log_beta) : lo * std::pow(ratio, best_i);
            return BestWindow{Window::kaiser(beta), worst_case_tail(Window::kaiser(beta), confidence)};
        }
    }
    throw std::invalid_argument("best_window: unknown family");
}

AncillaRequirement extra_ancillas_needed(WindowFamily family, double delta_target, double eps_confidence) {
    if (!(delta_target > 0.0 && delta_target < 1.0)) {
        throw std::invalid_argument("extra_ancillas_needed: delta_target must be in (0, 1)");
    }
    if (!(eps_confidence > 0.0 && eps_confidence < 1.0)) {
        throw std::invalid_argument("extra_ancillas_needed: eps_confidence must be in (0, 1)");
    }
    auto best_at = [&](double e) { return best_window(family, std::exp2(e)); };
    AncillaRequirement req;
    BestWindow hi_best = best_at(0.0);
    double hi = 0.0;
    while (hi_best.delta > delta_target) {
        hi += 1.0;
        if (hi > kMaxExtraAncillas) {
            req.extra = kMaxExtraAncillas;
            req.best = hi_best;
            req.feasible = false;
            return req;
        }
        hi_best = best_at(hi);
    }
    if (hi > 0.0) {
        double lo = hi - 1.0;
        for (int it = 0; it < 30; ++it) {
            const double mid = 0.5 * (lo + hi);
            BestWindow b = best_at(mid);
            if (b.delta <= delta_target) {
                hi = mid;
                hi_best = b;
            } else {
                lo = mid;
            }
        }
    }
    req.extra = hi;
    req.best = hi_best;
    req.feasible = true;
    req.l = static_cast<int>(std::ceil(std::log2(1.0 / eps_confidence) + hi - 1e-12));
    return req;
}

std::pair<int, double> kaiser_chebyshev_degree(double beta, double tol) {
    if (!(beta >= 0.0)) throw std::invalid_argument("kaiser_chebyshev_degree: beta must be >= 0");
    if (!(tol > 0.0)) throw std::invalid_argument("kaiser_chebyshev_degree: tol must be positive");
    const double denom = std::cyl_bessel_i(0.0, beta);
    auto f = [&](double t) { return std::cyl_bessel_i(0.0, beta * std::sqrt(std::max(0.0, 1.0 - t * t))) / denom; };
    auto error_at = [&](int degree) {
        const std::vector<double> coeffs = chebyshev_interpolate(f, degree);
        const std::size_t grid = 2048 + 8 * static_cast<std::size_t>(degree);
        std::vector<double> t(grid + 1);
        for (std::size_t i = 0; i <= grid; ++i) t[i] = std::cos(kPi * static_cast<double>(i) / static_cast<double>(grid));
        const std::vector<double> v = chebyshev_values(coeffs, t);
        double err = 0.0;
        for (std::size_t i = 0; i <= grid; ++i) err = std::max(err, std::abs(v[i] - f(t[i])));
        return err;
    };
    // The function is even, so only even degrees are tried.
    int hi = 2;
    double hi_err = error_at(hi);
    while (hi_err > tol) {
        if (hi >= kMaxKaiserDegree) {
            throw NumericError(fmt::format("kaiser_chebyshev_degree: beta = {} needs degree above {}", beta, kMaxKaiserDegree),
                               hi_err);
        }
        hi *= 2;
        hi_err = error_at(hi);
    }
    int lo = hi / 2;  // fails, or is below the first try
    while (hi - lo > 2) {
        const int mid = (lo + hi) / 2 / 2 * 2;
        const double err = error_at(mid);
        if (err <= tol) {
            hi = mid;
            hi_err = err;
        } else {
            lo = mid;
        }
    }
    return {hi, hi_err};
}

double bspline_success_amplitude(int m) {
    if (m < 1) throw std::invalid_argument("bspline_success_amplitude: m must be >= 1");
    const double peak = cardinal_bspline(m, 0.5 * m);
    double integral = 0.0;
    for (int j = 0; j < m; ++j) {
        integral += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
            [&](double u) {
                const double v = cardinal_bspline(m, u) / peak;
                return v * v;
            },
            j, j + 1, 0);
    }
    return std::sqrt(integral / m);
}

double kaiser_success_amplitude(double beta) {
    if (!(beta >= 0.0)) throw std::invalid_argument("kaiser_success_amplitude: beta must be >= 0");
    const double denom = std::cyl_bessel_i(0.0, beta);
    const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [&](double t) {
            const double v = std::cyl_bessel_i(0.0, beta * std::sqrt(std::max(0.0, 1.0 - t * t))) / denom;
            return v * v;
        },
        -1.0, 1.0, 15, 1e-12);
    return std::sqrt(0.5 * integral);
}

WindowCostComparison window_prep_cost_comparison(int extra_ancillas, int base_qubits, std::int64_t log_inv_eps) {
    if (extra_ancillas < 0 || extra_ancillas > 10) {
        throw std::invalid_argument("window_prep_cost_comparison: extra_ancillas must be in [0, 10]");
    }
    if (base_qubits < 8) throw std::invalid_argument("window_prep_cost_comparison: base_qubits must be >= 8");
    if (log_inv_eps < 2) throw std::invalid_argument("window_prep_cost_comparison: log_inv_eps must be >= 2");
    WindowCostComparison out;
    out.extra_ancillas = extra_ancillas;
    out.base_qubits = base_qubits;
    out.log_inv_eps = log_inv_eps;
    const std::int64_t n = base_qubits + extra_ancillas;
    const std::int64_t N = std::int64_t{1} << std::min<std::int64_t>(n, 62);

    out.bspline_m = 1 << extra_ancillas;
    if (out.bspline_m > 1) {
        const double a = bspline_success_amplitude(out.bspline_m);
        out.bspline_aa_rounds = aa_rounds_estimate(1.0, N, a).rounds;
        out.bspline_toffoli = estimate_resources(n, out.bspline_m - 1, out.bspline_m, base_qubits, log_inv_eps,
                                                 out.bspline_aa_rounds, BeVariant::uniform_sizes())
                                  .toffoli_total_with_aa;
    }

    const BestWindow kaiser = best_window(WindowFamily::kKaiser, std::exp2(extra_ancillas));
    out.kaiser_beta = kaiser.window.beta;
    const auto [degree, err] = kaiser_chebyshev_degree(out.kaiser_beta, std::exp2(-static_cast<double>(log_inv_eps)));
    out.kaiser_degree = degree;
    out.kaiser_fit_error = err;
    out.kaiser_aa_rounds = aa_rounds_estimate(1.0, N, kaiser_success_amplitude(out.kaiser_beta)).rounds;
    out.kaiser_toffoli =
        estimate_resources(n, degree, 1, n, log_inv_eps, out.kaiser_aa_rounds, BeVariant::uniform_sizes())
            .toffoli_total_with_aa;
    out.ratio = out.bspline_toffoli > 0
                    ? static_cast<double>(out.kaiser_toffoli) / static_cast<double>(out.bspline_toffoli)
                    : std::numeric_limits<double>::infinity();
    return out;
}

void write_fig6_csv(std::ostream& os, std::span<const double> delta_targets, int base_qubits) {
    if (base_qubits < 1) throw std::invalid_argument("write_fig6_csv: base_qubits must be >= 1");
    constexpr WindowFamily kFamilies[] = {WindowFamily::kRect, WindowFamily::kKaiser, WindowFamily::kBspline};
    const double eps = std::exp2(-static_cast<double>(base_qubits));
    std::vector<AncillaRequirement> results(delta_targets.size() * 3);
    parallel_for(results.size(), [&](std::size_t i) {
        results[i] = extra_ancillas_needed(kFamilies[i % 3], delta_targets[i / 3], eps);
    });
    os << "delta_target,window,extra_ancillas\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
        const std::string value = results[i].feasible ? fmt::format("{:.6f}", results[i].extra) : "inf";
        os << fmt::format("{:.6g},{},{}\n", delta_targets[i / 3], family_name(kFamilies[i % 3]), value);
    }
}

void write_fig7_csv(std::ostream& os, std::span<const int> extra_ancillas, int base_qubits) {
    std::vector<WindowCostComparison> results(extra_ancillas.size());
    parallel_for(results.size(), [&](std::size_t i) {
        results[i] = window_prep_cost_comparison(extra_ancillas[i], base_qubits);
    });
    os << "extra_ancillas,window,toffoli,ratio\n";
    for (const auto& r : results) {
        const std::string ratio = std::isfinite(r.ratio) ? fmt::format("{:.6f}", r.ratio) : "inf";
        os << fmt::format("{},bspline,{},{}\n", r.extra_ancillas, r.bspline_toffoli, ratio);
        os << fmt::format("{},kaiser,{},{}\n", r.extra_ancillas, r.kaiser_toffoli, ratio);
    }
}

}  // namespace pqsvt
