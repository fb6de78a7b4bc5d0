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

#include "qrw/algebra/padic.hpp"

#include <string>

#include "qrw/error.hpp"

namespace qrw::algebra {
namespace {

bool is_prime_by_trial_division(std::uint64_t p) {
    if (p < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::vector<std::uint64_t> padic_digits(std::uint64_t m, std::uint64_t p) {
    if (!is_prime_by_trial_division(p)) {
        throw ArgumentError("p-adic base " + std::to_string(p) + " is not prime");
    }
    std::vector<std::uint64_t> digits;
    while (m > 0) {
        digits.push_back(m % p);
        m /= p;
    }
    return digits;
}

std::uint64_t padic_value(const std::vector<std::uint64_t> &digits, std::uint64_t p) {
    std::uint64_t value = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        value = value * p + *it;
    }
    return value;
}

bool field_check(std::uint64_t q) {
    if (q < 2 || q > 97) {
        throw ArgumentError("field_check supports 2 <= q <= 97");
    }
    auto add = [q](std::uint64_t a, std::uint64_t b) { return (a + b) % q; };
    auto mul = [q](std::uint64_t a, std::uint64_t b) { return (a * b) % q; };
    for (std::uint64_t a = 0; a < q; ++a) {
        bool has_neg = false;
        bool has_inv = a == 0;
        for (std::uint64_t b = 0; b < q; ++b) {
            if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) {
                return false;
            }
            has_neg = has_neg || add(a, b) == 0;
            has_inv = has_inv || mul(a, b) == 1;
            for (std::uint64_t c = 0; c < q; ++c) {
                if (add(add(a, b), c) != add(a, add(b, c)) || mul(mul(a, b), c) != mul(a, mul(b, c)) ||
                    mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
                    return false;
                }
            }
        }
        if (add(a, 0) != a || mul(a, 1) != a || !has_neg || !has_inv) {
            return false;
        }
    }
    return true;
}

}  // namespace qrw::algebra
