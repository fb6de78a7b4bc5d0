// Copyright 2026 The QRW Authors
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

// AVX2/FMA variants of the kernel table. This translation unit is compiled
// with -mavx2 -mfma and must only be entered after a runtime CPU check.

#include <immintrin.h>

#include <cstddef>

#include "qrw/kernels/kernels.hpp"

namespace qrw::kernels {
namespace {

// Two interleaved complex values per register: [re0, im0, re1, im1].
inline __m256d load2(const Complex *p) { return _mm256_loadu_pd(reinterpret_cast<const double *>(p)); }
inline void store2(Complex *p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double *>(p), v); }
inline __m256d broadcast(Complex c) { return _mm256_setr_pd(c.real(), c.imag(), c.real(), c.imag()); }
inline __m256d pair(Complex lo, Complex hi) { return _mm256_setr_pd(lo.real(), lo.imag(), hi.real(), hi.imag()); }

inline __m256d cmul(__m256d a, __m256d b) {
    const __m256d b_re = _mm256_movedup_pd(b);
    const __m256d b_im = _mm256_permute_pd(b, 0xF);
    const __m256d a_swapped = _mm256_permute_pd(a, 0x5);
    return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_swapped, b_im));
}

inline double horizontal_sum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void apply_matrix(std::span<Complex> amps, unsigned target, const Matrix2 &m) {
    const std::size_t n = amps.size();
    Complex *a = amps.data();
    if (target == 0) {
        const __m256d diag = pair(m.m00, m.m11);
        const __m256d off = pair(m.m01, m.m10);
        for (std::size_t i = 0; i < n; i += 2) {
            const __m256d v = load2(a + i);
            const __m256d swapped = _mm256_permute2f128_pd(v, v, 0x01);
            store2(a + i, _mm256_add_pd(cmul(v, diag), cmul(swapped, off)));
        }
        return;
    }
    const std::size_t stride = std::size_t{1} << target;
    const __m256d b00 = broadcast(m.m00), b01 = broadcast(m.m01);
    const __m256d b10 = broadcast(m.m10), b11 = broadcast(m.m11);
    for (std::size_t block = 0; block < n; block += 2 * stride) {
        for (std::size_t i = block; i < block + stride; i += 2) {
            const __m256d lo = load2(a + i);
            const __m256d hi = load2(a + i + stride);
            store2(a + i, _mm256_add_pd(cmul(lo, b00), cmul(hi, b01)));
            store2(a + i + stride, _mm256_add_pd(cmul(lo, b10), cmul(hi, b11)));
        }
    }
}

void apply_cnot(std::span<Complex> amps, unsigned control, unsigned target) {
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    Complex *a = amps.data();
    if (control == 0 || target == 0) {
        // Pairs straddle a register; a plain swap is as fast as a shuffle here.
        for (std::size_t i = 0; i < amps.size(); ++i) {
            if ((i & cbit) && !(i & tbit)) {
                std::swap(a[i], a[i | tbit]);
            }
        }
        return;
    }
    for (std::size_t i = 0; i < amps.size(); i += 2) {
        if ((i & cbit) && !(i & tbit)) {
            const __m256d lo = load2(a + i);
            const __m256d hi = load2(a + (i | tbit));
            store2(a + i, hi);
            store2(a + (i | tbit), lo);
        }
    }
}

void apply_phase(std::span<Complex> amps, std::uint64_t mask, Complex phase) {
    const Complex one{1.0, 0.0};
    Complex *a = amps.data();
    for (std::size_t i = 0; i < amps.size(); i += 2) {
        const bool sel0 = (i & mask) == mask;
        const bool sel1 = ((i + 1) & mask) == mask;
        if (!sel0 && !sel1) {
            continue;
        }
        store2(a + i, cmul(load2(a + i), pair(sel0 ? phase : one, sel1 ? phase : one)));
    }
}

void probabilities(std::span<const Complex> amps, std::span<double> out) {
    const std::size_t n = amps.size();
    const Complex *a = amps.data();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v0 = load2(a + i);
        const __m256d v1 = load2(a + i + 2);
        const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
        _mm256_storeu_pd(out.data() + i, _mm256_permute4x64_pd(h, 0xD8));
    }
    for (; i < n; ++i) {
        out[i] = a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
}

double probability_of_one(std::span<const Complex> amps, unsigned qubit) {
    const std::size_t n = amps.size();
    const Complex *a = amps.data();
    __m256d acc = _mm256_setzero_pd();
    if (qubit == 0) {
        const __m256d upper = _mm256_castsi256_pd(_mm256_setr_epi64x(0, 0, -1, -1));
        for (std::size_t i = 0; i < n; i += 2) {
            const __m256d v = load2(a + i);
            acc = _mm256_add_pd(acc, _mm256_and_pd(_mm256_mul_pd(v, v), upper));
        }
        return horizontal_sum(acc);
    }
    const std::size_t stride = std::size_t{1} << qubit;
    for (std::size_t block = 0; block < n; block += 2 * stride) {
        for (std::size_t i = block + stride; i < block + 2 * stride; i += 2) {
            const __m256d v = load2(a + i);
            acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
        }
    }
    return horizontal_sum(acc);
}

void collapse(std::span<Complex> amps, unsigned qubit, bool bit, double scale) {
    const std::size_t n = amps.size();
    Complex *a = amps.data();
    const __m256d factor = _mm256_set1_pd(scale);
    if (qubit == 0) {
        const __m256d keep = bit ? _mm256_castsi256_pd(_mm256_setr_epi64x(0, 0, -1, -1))
                                 : _mm256_castsi256_pd(_mm256_setr_epi64x(-1, -1, 0, 0));
        for (std::size_t i = 0; i < n; i += 2) {
            store2(a + i, _mm256_and_pd(_mm256_mul_pd(load2(a + i), factor), keep));
        }
        return;
    }
    const std::size_t stride = std::size_t{1} << qubit;
    const __m256d zero = _mm256_setzero_pd();
    for (std::size_t block = 0; block < n; block += 2 * stride) {
        Complex *kept = a + block + (bit ? stride : 0);
        Complex *dropped = a + block + (bit ? 0 : stride);
        for (std::size_t i = 0; i < stride; i += 2) {
            store2(kept + i, _mm256_mul_pd(load2(kept + i), factor));
            store2(dropped + i, zero);
        }
    }
}

double norm_squared(std::span<const Complex> amps) {
    __m256d acc = _mm256_setzero_pd();
    const std::size_t n = amps.size();
    const Complex *a = amps.data();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d v = load2(a + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    double total = horizontal_sum(acc);
    for (; i < n; ++i) {
        total += std::norm(a[i]);
    }
    return total;
}

void leapfrog_step(std::span<const double> prev, std::span<const double> cur, std::span<double> next,
                   double courant_sq) {
    const std::size_t n = cur.size();
    if (n == 0) {
        return;
    }
    next[0] = 0.0;
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d k = _mm256_set1_pd(courant_sq);
    std::size_t i = 1;
    // Same operation order as the scalar kernel, without FMA, so the two agree bit for bit.
    for (; i + 4 < n; i += 4) {
        const __m256d c = _mm256_loadu_pd(cur.data() + i);
        const __m256d l = _mm256_loadu_pd(cur.data() + i - 1);
        const __m256d r = _mm256_loadu_pd(cur.data() + i + 1);
        const __m256d p = _mm256_loadu_pd(prev.data() + i);
        const __m256d two_c = _mm256_mul_pd(two, c);
        const __m256d lap = _mm256_add_pd(_mm256_sub_pd(r, two_c), l);
        _mm256_storeu_pd(next.data() + i, _mm256_add_pd(_mm256_sub_pd(two_c, p), _mm256_mul_pd(k, lap)));
    }
    for (; i + 1 < n; ++i) {
        next[i] = 2.0 * cur[i] - prev[i] + courant_sq * (cur[i + 1] - 2.0 * cur[i] + cur[i - 1]);
    }
    next[n - 1] = 0.0;
}

}  // namespace

const KernelSet &avx2_kernel_table() {
    static const KernelSet table{
        "avx2",   apply_matrix, apply_cnot,   apply_phase,   probabilities, probability_of_one,
        collapse, norm_squared, leapfrog_step,
    };
    return table;
}

}  // namespace qrw::kernels
