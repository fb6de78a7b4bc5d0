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

#include <cstdint>
#include <vector>

namespace qrw::primes {

inline constexpr std::uint64_t kMaxSieveLimit = 100'000'000;

/// Primes up to `limit()` with O(1) membership and O(log n) counting.
class PrimeTable {
   public:
    std::uint64_t limit() const noexcept { return limit_; }
    const std::vector<std::uint32_t> &primes() const noexcept { return primes_; }

    /// Throws DomainError when n exceeds the sieved limit.
    bool is_prime(std::uint64_t n) const;
    /// Number of primes <= n; n may not exceed the limit.
    std::uint64_t pi(std::uint64_t n) const;

   private:
    friend PrimeTable sieve(std::uint64_t limit);
    std::uint64_t limit_ = 0;
    std::vector<std::uint32_t> primes_;
    std::vector<std::uint64_t> odd_bits_;  // bit k set: 2k+1 is prime
};

/// Sieve of Eratosthenes over odd numbers. Requires 2 <= limit <= 10^8,
/// otherwise throws ArgumentError.
PrimeTable sieve(std::uint64_t limit);

/// True when p and q are primes differing by exactly 2.
bool are_twin_primes(std::uint64_t p, std::uint64_t q, const PrimeTable &table);

}  // namespace qrw::primes
