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

#include "qrw/primes/log_integral.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <string>

#include "qrw/error.hpp"

namespace qrw::primes {

double li(double n) {
    if (!std::isfinite(n) || n < 2.0) {
        throw DomainError("li(n) requires finite n >= 2, got " + std::to_string(n));
    }
    if (n == 2.0) {
        return 0.0;
    }
    // With x = e^t the integrand e^t / t is smooth on [ln 2, ln n].
    auto integrand = [](double t) { return std::exp(t) / t; };
    const double lo = std::log(2.0);
    const double hi = std::log(n);
    // Unit-width panels keep the exponential growth within each panel mild.
    double total = 0.0;
    for (double a = lo; a < hi; a += 1.0) {
        const double b = std::min(a + 1.0, hi);
        total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, a, b, 15, 1e-15);
    }
    return total;
}

}  // namespace qrw::primes
