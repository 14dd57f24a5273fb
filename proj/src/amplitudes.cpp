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

#include "pqsvt/amplitudes.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <type_traits>

#include "pqsvt/chebyshev.hpp"
#include "pqsvt/segmentation.hpp"
#include "pqsvt/simd/kernels.hpp"

namespace pqsvt {

namespace {

constexpr int kMaxSampledQubits = 26;

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

std::string TargetSpec::kind_name() const {
    return std::visit(Overloaded{
                          [](const PowerTarget&) { return std::string("power"); },
                          [](const LogTarget&) { return std::string("log"); },
                          [](const BsplineTarget&) { return std::string("bspline"); },
                          [](const KaiserTarget&) { return std::string("kaiser"); },
                          [](const CustomTarget&) { return std::string("custom"); },
                      },
                      kind);
}

void TargetSpec::validate() const {
    if (n < 1 || n > kMaxSampledQubits) {
        throw std::invalid_argument("TargetSpec: n must be in [1, " + std::to_string(kMaxSampledQubits) + "]");
    }
    std::visit(Overloaded{
                   [](const PowerTarget& p) {
                       // alpha = 1 (the linear ramp) is admitted as the closed end of the family.
                       if (!(p.alpha > 0.0 && p.alpha <= 1.0)) {
                           throw std::invalid_argument("TargetSpec: power exponent must lie in (0, 1]");
                       }
                   },
                   [](const LogTarget&) {},
                   [this](const BsplineTarget& b) {
                       if (b.m < 1) throw std::invalid_argument("TargetSpec: bspline order m must be >= 1");
                       if (b.m > size()) throw std::invalid_argument("TargetSpec: bspline order m exceeds 2^n");
                   },
                   [](const KaiserTarget& k) {
                       if (!(k.beta >= 0.0) || !std::isfinite(k.beta)) {
                           throw std::invalid_argument("TargetSpec: kaiser beta must be finite and >= 0");
                       }
                   },
                   [this](const CustomTarget& c) {
                       if (static_cast<std::int64_t>(c.samples.size()) != size()) {
                           throw std::invalid_argument("TargetSpec: custom sample count must equal 2^n");
                       }
                   },
               },
               kind);
}

AmplitudeVector normalize_amplitudes(std::vector<double> raw) {
    for (double v : raw) {
        if (!std::isfinite(v)) throw std::invalid_argument("normalize_amplitudes: non-finite sample");
    }
    const double norm = std::sqrt(simd::dot(raw, raw));
    if (!(norm > 0.0)) throw std::invalid_argument("normalize_amplitudes: zero vector");
    for (double& v : raw) v /= norm;
    return AmplitudeVector{std::move(raw), norm};
}

double bspline_truncated_power_sum(int m, std::int64_t x, std::int64_t N) {
    using boost::multiprecision::cpp_int;
    if (m < 1) throw std::invalid_argument("bspline_truncated_power_sum: m must be >= 1");
    cpp_int total = 0;
    cpp_int binom = 1;  // C(m, p)
    for (int p = 0; p <= m; ++p) {
        const std::int64_t shifted = x * m - static_cast<std::int64_t>(p) * N;
        cpp_int term;
        if (shifted > 0) {
            term = boost::multiprecision::pow(cpp_int(shifted), static_cast<unsigned>(m - 1));
        } else if (shifted == 0 && m == 1) {
            term = 1;  // (0)_+^0 = 1: right-continuous step
        } else {
            term = 0;
        }
        term *= binom;
        if (p & 1) {
            total -= term;
        } else {
            total += term;
        }
        binom = binom * (m - p) / (p + 1);
    }
    return total.convert_to<double>();
}

double cardinal_bspline(int m, double u) {
    if (m < 1) throw std::invalid_argument("cardinal_bspline: m must be >= 1");
    if (u < 0.0 || u >= static_cast<double>(m)) return 0.0;
    // b[j] holds M_k(u - j) for the current order k.
    std::vector<double> b(static_cast<std::size_t>(m), 0.0);
    for (int j = 0; j < m; ++j) {
        const double v = u - j;
        b[static_cast<std::size_t>(j)] = (v >= 0.0 && v < 1.0) ? 1.0 : 0.0;
    }
    for (int k = 2; k <= m; ++k) {
        for (int j = 0; j + k <= m; ++j) {
            const double v = u - j;
            b[static_cast<std::size_t>(j)] =
                (v * b[static_cast<std::size_t>(j)] + (k - v) * b[static_cast<std::size_t>(j + 1)]) / (k - 1);
        }
    }
    return b[0];
}

std::vector<double> kaiser_samples(double beta, std::int64_t count) {
    if (count < 2) throw std::invalid_argument("kaiser_samples: need at least two samples");
    std::vector<double> w(static_cast<std::size_t>(count));
    const double denom = std::cyl_bessel_i(0.0, beta);
    for (std::int64_t i = 0; i < count; ++i) {
        const double r = 2.0 * static_cast<double>(i) / static_cast<double>(count - 1) - 1.0;
        w[static_cast<std::size_t>(i)] = std::cyl_bessel_i(0.0, beta * std::sqrt(std::max(0.0, 1.0 - r * r))) / denom;
    }
    return w;
}

AmplitudeVector sample_target(const TargetSpec& spec) {
    spec.validate();
    const std::int64_t N = spec.size();
    std::vector<double> raw(static_cast<std::size_t>(N));
    std::visit(Overloaded{
                   [&](const PowerTarget& p) {
                       for (std::int64_t x = 0; x < N; ++x) {
                           raw[static_cast<std::size_t>(x)] =
                               std::pow(static_cast<double>(x) / static_cast<double>(N), p.alpha);
                       }
                   },
                   [&](const LogTarget&) {
                       raw[0] = 0.0;
                       for (std::int64_t x = 1; x < N; ++x) {
                           raw[static_cast<std::size_t>(x)] = std::log(static_cast<double>(x) / static_cast<double>(N));
                       }
                   },
                   [&](const BsplineTarget& b) {
                       // Proportional to M_m(x m / N); the common factor cancels on normalization.
                       for (std::int64_t x = 0; x < N; ++x) {
                           raw[static_cast<std::size_t>(x)] = bspline_truncated_power_sum(b.m, x, N);
                       }
                   },
                   [&](const KaiserTarget& k) { raw = kaiser_samples(k.beta, N); },
                   [&](const CustomTarget& c) { raw = c.samples; },
               },
               spec.kind);
    return normalize_amplitudes(std::move(raw));
}

PiecewisePolynomial bspline_piecewise_coefficients(int m, int n) {
    if (m < 1 || !is_power_of_two(m)) {
        throw std::invalid_argument("bspline_piecewise_coefficients: m must be a power of two");
    }
    if (m > 32) throw std::invalid_argument("bspline_piecewise_coefficients: m must be <= 32");
    if (n < 1 || n > kMaxSampledQubits) throw std::invalid_argument("bspline_piecewise_coefficients: n out of range");
    const std::int64_t N = std::int64_t{1} << n;
    if (m > N) throw std::invalid_argument("bspline_piecewise_coefficients: m exceeds 2^n");

    const std::int64_t L = N / m;
    PiecewisePolynomial plan;
    plan.n = n;
    for (int j = 0; j < m; ++j) {
        Segment s;
        s.start = j * L;
        s.length = L;
        s.degree = m - 1;
        // Local offset r = L (1 - t) / 2, so the spline argument is j + (1 - t) / 2.
        s.coeffs = chebyshev_interpolate([m, j](double t) { return cardinal_bspline(m, j + 0.5 * (1.0 - t)); }, m - 1);
        plan.segments.push_back(std::move(s));
    }

    // Match the normalization of sample_target over the discrete points.
    double sum_sq = 0.0;
    std::vector<double> t(static_cast<std::size_t>(std::min<std::int64_t>(L, 1 << 16)));
    for (const auto& s : plan.segments) {
        for (std::int64_t base = 0; base < L; base += static_cast<std::int64_t>(t.size())) {
            const std::size_t chunk = static_cast<std::size_t>(std::min<std::int64_t>(L - base, t.size()));
            std::span<double> tc(t.data(), chunk);
            for (std::size_t r = 0; r < chunk; ++r) tc[r] = segment_argument(base + static_cast<std::int64_t>(r), L);
            const auto vals = chebyshev_values(s.coeffs, tc);
            sum_sq += simd::dot(vals, vals);
        }
    }
    const double scale = 1.0 / std::sqrt(sum_sq);
    for (auto& s : plan.segments) {
        for (double& c : s.coeffs) c *= scale;
    }
    plan.pmax = continuous_pmax(plan);
    plan.validate();
    return plan;
}

}  // namespace pqsvt
