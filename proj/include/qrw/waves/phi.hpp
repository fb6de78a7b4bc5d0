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
#include <cstddef>

namespace qrw::waves {

inline constexpr std::size_t kMaxPhiTerms = 500;

/// Partial sum for K = 0..k_max of
///   4 theta* (-1)^K (2 K pi + z) ((z/pi)_K)^3 / (K!)^3
/// with (a)_K the rising factorial and theta* = 179.21 deg in radians.
/// Throws ArgumentError for k_max > 500 and SaturationError naming K when a
/// term overflows.
std::complex<double> phi_series(std::complex<double> z, std::size_t k_max);

/// 12.511 - z^4 / pi^3.
std::complex<double> phi_closed(std::complex<double> z);

/// -4 z^3 / pi^3.
std::complex<double> phi_derivative(std::complex<double> z);

/// Positive real root of phi_closed, (12.511 pi^3)^(1/4).
double phi_real_root();

/// 180 (pi/2 - 1) / pi, in degrees.
double polar_theta();

}  // namespace qrw::waves
