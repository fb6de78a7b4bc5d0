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

#include <array>
#include <complex>
#include <string_view>

namespace qrw::waves {

struct Event {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double t = 0.0;
};

/// Boost along x with velocity v: x' = g (x - v t), t' = g (t - v x / c^2),
/// y and z unchanged, g = 1/sqrt(1 - v^2/c^2). Throws DomainError unless
/// |v| < c and c > 0.
Event lorentz_boost(const Event &e, double v, double c);

/// c^2 t^2 - x^2 - y^2 - z^2.
double interval(const Event &e, double c);

/// Sum of the magnitudes of the interval's terms; the scale against which
/// interval rounding is measured.
double interval_scale(const Event &e, double c);

enum class VectorClass { Timelike, Null, Spacelike };

VectorClass classify_vector(double norm_sq);
std::string_view to_string(VectorClass c);

using FourVector = std::array<std::complex<double>, 4>;

/// xi^2 = sum x_i^2 + sum y_i^2 for xi = x - i y (squares, no conjugation).
std::complex<double> complex_norm(const FourVector &x, const FourVector &y);

}  // namespace qrw::waves
