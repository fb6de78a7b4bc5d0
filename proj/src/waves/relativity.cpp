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

#include "qrw/waves/relativity.hpp"

#include <cmath>
#include <string>

#include "qrw/error.hpp"

namespace qrw::waves {

Event lorentz_boost(const Event &e, double v, double c) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw DomainError("speed of light must be positive and finite");
    }
    if (!(std::abs(v) < c)) {
        throw DomainError("boost velocity " + std::to_string(v) + " must satisfy |v| < c");
    }
    const double beta = v / c;
    const double gamma = 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
    return Event{gamma * (e.x - v * e.t), e.y, e.z, gamma * (e.t - v * e.x / (c * c))};
}

double interval(const Event &e, double c) {
    const double ct = c * e.t;
    return (ct - e.x) * (ct + e.x) - e.y * e.y - e.z * e.z;
}

double interval_scale(const Event &e, double c) {
    const double ct = c * e.t;
    return ct * ct + e.x * e.x + e.y * e.y + e.z * e.z;
}

VectorClass classify_vector(double norm_sq) {
    if (norm_sq > 0.0) {
        return VectorClass::Timelike;
    }
    if (norm_sq < 0.0) {
        return VectorClass::Spacelike;
    }
    return VectorClass::Null;
}

std::string_view to_string(VectorClass c) {
    switch (c) {
        case VectorClass::Timelike:
            return "timelike";
        case VectorClass::Null:
            return "null";
        case VectorClass::Spacelike:
            return "spacelike";
    }
    return "";
}

std::complex<double> complex_norm(const FourVector &x, const FourVector &y) {
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t i = 0; i < 4; ++i) {
        sum += x[i] * x[i] + y[i] * y[i];
    }
    return sum;
}

}  // namespace qrw::waves
