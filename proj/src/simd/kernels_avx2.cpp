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

// Compiled with -mavx2 -mfma. Only reached through dispatch after a CPUID check.

#include <immintrin.h>

#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

#include "pqsvt/simd/kernels.hpp"

namespace pqsvt::simd::avx2 {

bool compiled() { return true; }

void chebyshev_eval(std::span<const double> coeffs, std::span<const double> t, std::span<double> out) {
    assert(t.size() == out.size());
    const std::size_t n = coeffs.size();
    const std::size_t count = t.size();
    if (n == 0) {
        for (std::size_t i = 0; i < count; ++i) out[i] = 0.0;
        return;
    }
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const __m256d x = _mm256_loadu_pd(t.data() + i);
        const __m256d two_x = _mm256_add_pd(x, x);
        __m256d b1 = _mm256_setzero_pd();
        __m256d b2 = _mm256_setzero_pd();
        for (std::size_t k = n - 1; k >= 1; --k) {
            // b0 = c_k + 2x b1 - b2
            const __m256d b0 = _mm256_fmadd_pd(two_x, b1, _mm256_sub_pd(_mm256_set1_pd(coeffs[k]), b2));
            b2 = b1;
            b1 = b0;
        }
        const __m256d r = _mm256_fmadd_pd(x, b1, _mm256_sub_pd(_mm256_set1_pd(coeffs[0]), b2));
        _mm256_storeu_pd(out.data() + i, r);
    }
    if (i < count) scalar::chebyshev_eval(coeffs, t.subspan(i), out.subspan(i));
}

void qsvt_block_values(std::span<const double> phases, std::span<const double> t, std::span<double> out) {
    assert(t.size() == out.size());
    assert(!phases.empty());
    const std::size_t len = phases.size();
    std::vector<double> c(len);
    std::vector<double> s(len);
    for (std::size_t j = 0; j < len; ++j) {
        c[j] = std::cos(0.5 * phases[j]);
        s[j] = std::sin(0.5 * phases[j]);
    }
    const std::size_t count = t.size();
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d minus_one = _mm256_set1_pd(-1.0);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        __m256d x = _mm256_loadu_pd(t.data() + i);
        x = _mm256_min_pd(_mm256_max_pd(x, minus_one), one);
        const __m256d y = _mm256_sqrt_pd(_mm256_max_pd(zero, _mm256_fnmadd_pd(x, x, one)));

        __m256d u0r = _mm256_set1_pd(c[0]);
        __m256d u0i = zero;
        __m256d u1r = zero;
        __m256d u1i = _mm256_set1_pd(-s[0]);
        for (std::size_t j = 1; j < len; ++j) {
            if (j & 1) {
                const __m256d r = _mm256_fmsub_pd(u0r, x, _mm256_mul_pd(u0i, y));
                const __m256d im = _mm256_fmadd_pd(u0r, y, _mm256_mul_pd(u0i, x));
                u0r = r;
                u0i = im;
            } else {
                const __m256d r = _mm256_fmadd_pd(u1r, x, _mm256_mul_pd(u1i, y));
                const __m256d im = _mm256_fmsub_pd(u1i, x, _mm256_mul_pd(u1r, y));
                u1r = r;
                u1i = im;
            }
            const __m256d cj = _mm256_set1_pd(c[j]);
            const __m256d sj = _mm256_set1_pd(s[j]);
            const __m256d n0r = _mm256_fmadd_pd(cj, u0r, _mm256_mul_pd(sj, u1i));
            const __m256d n0i = _mm256_fmsub_pd(cj, u0i, _mm256_mul_pd(sj, u1r));
            const __m256d n1r = _mm256_fmadd_pd(cj, u1r, _mm256_mul_pd(sj, u0i));
            const __m256d n1i = _mm256_fmsub_pd(cj, u1i, _mm256_mul_pd(sj, u0r));
            u0r = n0r;
            u0i = n0i;
            u1r = n1r;
            u1i = n1i;
        }
        _mm256_storeu_pd(out.data() + i, u0r);
    }
    if (i < count) scalar::qsvt_block_values(phases, t.subspan(i), out.subspan(i));
}

double dot(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    const std::size_t count = a.size();
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= count; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + i + 4), _mm256_loadu_pd(b.data() + i + 4), acc1);
    }
    for (; i + 4 <= count; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i), acc0);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
    double acc = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < count; ++i) acc += a[i] * b[i];
    return acc;
}

}  // namespace pqsvt::simd::avx2
