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

#include <cstddef>

#include "qrw/kernels/kernels.hpp"

namespace qrw::kernels {
namespace {

void apply_matrix(std::span<Complex> amps, unsigned target, const Matrix2 &m) {
    const std::size_t stride = std::size_t{1} << target;
    const std::size_t n = amps.size();
    for (std::size_t block = 0; block < n; block += 2 * stride) {
        for (std::size_t i = block; i < block + stride; ++i) {
            const Complex a0 = amps[i];
            const Complex a1 = amps[i + stride];
            amps[i] = m.m00 * a0 + m.m01 * a1;
            amps[i + stride] = m.m10 * a0 + m.m11 * a1;
        }
    }
}

void apply_cnot(std::span<Complex> amps, unsigned control, unsigned target) {
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & cbit) && !(i & tbit)) {
            std::swap(amps[i], amps[i | tbit]);
        }
    }
}

void apply_phase(std::span<Complex> amps, std::uint64_t mask, Complex phase) {
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) == mask) {
            amps[i] *= phase;
        }
    }
}

void probabilities(std::span<const Complex> amps, std::span<double> out) {
    for (std::size_t i = 0; i < amps.size(); ++i) {
        out[i] = std::norm(amps[i]);
    }
}

double probability_of_one(std::span<const Complex> amps, unsigned qubit) {
    const std::size_t bit = std::size_t{1} << qubit;
    double total = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & bit) {
            total += std::norm(amps[i]);
        }
    }
    return total;
}

void collapse(std::span<Complex> amps, unsigned qubit, bool bit, double scale) {
    const std::size_t mask = std::size_t{1} << qubit;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (((i & mask) != 0) == bit) {
            amps[i] *= scale;
        } else {
            amps[i] = Complex{0.0, 0.0};
        }
    }
}

double norm_squared(std::span<const Complex> amps) {
    double total = 0.0;
    for (const Complex &a : amps) {
        total += std::norm(a);
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
    for (std::size_t i = 1; i + 1 < n; ++i) {
        next[i] = 2.0 * cur[i] - prev[i] + courant_sq * (cur[i + 1] - 2.0 * cur[i] + cur[i - 1]);
    }
    next[n - 1] = 0.0;
}

}  // namespace

const KernelSet &scalar_kernels() {
    static const KernelSet table{
        "scalar",      apply_matrix, apply_cnot,   apply_phase,  probabilities, probability_of_one,
        collapse,      norm_squared, leapfrog_step,
    };
    return table;
}

}  // namespace qrw::kernels
