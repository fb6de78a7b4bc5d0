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

#pragma once

#include <complex>
#include <cstdint>
#include <span>

namespace qrw::kernels {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix acting on a single qubit.
struct Matrix2 {
    Complex m00, m01, m10, m11;
};

/// Table of the data-parallel inner loops used by the simulator and the wave
/// propagator. Every entry has a portable scalar definition; vector variants
/// must agree with it to within a few ulps (FMA contraction changes rounding).
///
/// Amplitude layout: qubit k is bit k of the basis index (qubit 0 is the least
/// significant bit).
struct KernelSet {
    const char *name;

    /// Applies `m` to qubit `target` in place.
    void (*apply_matrix)(std::span<Complex> amps, unsigned target, const Matrix2 &m);
    /// Swaps the target-bit pair of every basis state whose control bit is set.
    void (*apply_cnot)(std::span<Complex> amps, unsigned control, unsigned target);
    /// Multiplies every amplitude whose index has all bits of `mask` set by `phase`.
    void (*apply_phase)(std::span<Complex> amps, std::uint64_t mask, Complex phase);
    /// out[i] = |amps[i]|^2.
    void (*probabilities)(std::span<const Complex> amps, std::span<double> out);
    /// Sum of |amps[i]|^2 over indices with bit `qubit` set.
    double (*probability_of_one)(std::span<const Complex> amps, unsigned qubit);
    /// Zeroes amplitudes whose bit `qubit` differs from `bit`, scales the rest.
    void (*collapse)(std::span<Complex> amps, unsigned qubit, bool bit, double scale);
    double (*norm_squared)(std::span<const Complex> amps);

    /// One explicit leapfrog step of psi_tt = v^2 psi_xx on a uniform grid:
    /// next[i] = 2 cur[i] - prev[i] + courant_sq (cur[i+1] - 2 cur[i] + cur[i-1])
    /// for interior i; both end points of `next` are set to zero.
    void (*leapfrog_step)(std::span<const double> prev, std::span<const double> cur, std::span<double> next,
                          double courant_sq);
};

const KernelSet &scalar_kernels();

/// The AVX2/FMA table, or nullptr when it was not compiled in or the running
/// CPU lacks the instructions.
const KernelSet *avx2_kernels();

/// Kernels selected for this process: AVX2 when available, scalar otherwise.
/// Setting QRW_KERNELS=scalar in the environment forces the scalar table.
const KernelSet &active_kernels();

}  // namespace qrw::kernels
