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

#include "qrw/primes/prime_table.hpp"

#include <algorithm>
#include <string>

#include "qrw/error.hpp"

namespace qrw::primes {

PrimeTable sieve(std::uint64_t limit) {
    if (limit < 2 || limit > kMaxSieveLimit) {
        throw ArgumentError("sieve limit must lie in [2, 1e8], got " + std::to_string(limit));
    }
    PrimeTable table;
    table.limit_ = limit;
    const std::uint64_t odd_count = (limit + 1) / 2;  // odd numbers 1, 3, ..., <= limit
    table.odd_bits_.assign((odd_count + 63) / 64, ~std::uint64_t{0});
    auto clear = [&](std::uint64_t k) { table.odd_bits_[k >> 6] &= ~(std::uint64_t{1} << (k & 63)); };
    auto test = [&](std::uint64_t k) { return (table.odd_bits_[k >> 6] >> (k & 63)) & 1U; };
    clear(0);
    for (std::uint64_t p = 3; p * p <= limit; p += 2) {
        if (test(p / 2)) {
            for (std::uint64_t m = p * p; m <= limit; m += 2 * p) {
                clear(m / 2);
            }
        }
    }
    if (odd_count % 64 != 0) {
        table.odd_bits_.back() &= (std::uint64_t{1} << (odd_count % 64)) - 1;
    }
    table.primes_.push_back(2);
    for (std::uint64_t k = 1; k < odd_count; ++k) {
        if (test(k)) {
            table.primes_.push_back(static_cast<std::uint32_t>(2 * k + 1));
        }
    }
    return table;
}

bool PrimeTable::is_prime(std::uint64_t n) const {
    if (n > limit_) {
        throw DomainError(std::to_string(n) + " exceeds the sieved limit " + std::to_string(limit_));
    }
    if (n == 2) {
        return true;
    }
    if (n % 2 == 0) {
        return false;
    }
    return (odd_bits_[(n / 2) >> 6] >> ((n / 2) & 63)) & 1U;
}

std::uint64_t PrimeTable::pi(std::uint64_t n) const {
    if (n > limit_) {
        throw DomainError(std::to_string(n) + " exceeds the sieved limit " + std::to_string(limit_));
    }
    return static_cast<std::uint64_t>(std::upper_bound(primes_.begin(), primes_.end(), n) - primes_.begin());
}

bool are_twin_primes(std::uint64_t p, std::uint64_t q, const PrimeTable &table) {
    const std::uint64_t gap = p > q ? p - q : q - p;
    return gap == 2 && table.is_prime(p) && table.is_prime(q);
}

}  // namespace qrw::primes
