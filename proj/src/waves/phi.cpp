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

#include "qrw/waves/phi.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qrw/error.hpp"
#include "qrw/waves/constants.hpp"

namespace qrw::waves {

using std::numbers::pi;

std::complex<double> phi_series(std::complex<double> z, std::size_t k_max) {
    if (k_max > kMaxPhiTerms) {
        throw ArgumentError("phi_series supports at most " + std::to_string(kMaxPhiTerms) + " terms");
    }
    // ratio = (z/pi)_K / K!, advanced by (z/pi + K - 1) / K.
    std::complex<double> ratio{1.0, 0.0};
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t k = 0; k <= k_max; ++k) {
        const double kd = static_cast<double>(k);
        if (k > 0) {
            ratio *= (z / pi + (kd - 1.0)) / kd;
        }
        const std::complex<double> term = (k % 2 == 0 ? 1.0 : -1.0) * (2.0 * kd * pi + z) * ratio * ratio * ratio;
        if (!std::isfinite(term.real()) || !std::isfinite(term.imag())) {
            throw SaturationError("phi_series term K=" + std::to_string(k) + " is not finite");
        }
        sum += term;
    }
    const std::complex<double> result = 4.0 * kThetaStar * sum;
    if (!std::isfinite(result.real()) || !std::isfinite(result.imag())) {
        throw SaturationError("phi_series partial sum overflowed at K=" + std::to_string(k_max));
    }
    return result;
}

std::complex<double> phi_closed(std::complex<double> z) { return kPhiConstant - (z * z * z * z) / (pi * pi * pi); }

std::complex<double> phi_derivative(std::complex<double> z) { return -4.0 * z * z * z / (pi * pi * pi); }

double phi_real_root() { return std::pow(kPhiConstant * pi * pi * pi, 0.25); }

double polar_theta() { return 180.0 * (pi / 2.0 - 1.0) / pi; }

}  // namespace qrw::waves
