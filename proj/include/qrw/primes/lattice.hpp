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
#include <cstdint>
#include <optional>
#include <vector>

#include "qrw/primes/prime_table.hpp"

namespace qrw::primes {

inline constexpr std::uint64_t kDefaultTriggerCap = 10'000;

struct TripletDistances {
    std::uint64_t d12;
    std::uint64_t d23;
    std::uint64_t d13;
    friend bool operator==(const TripletDistances &, const TripletDistances &) = default;
};

/// Distances of the prime triplet starting at p, trying (p, p+2, p+4),
/// then (p, p+2, p+6), then (p, p+4, p+6). nullopt when none is all prime.
/// The table must cover p + 6.
std::optional<TripletDistances> triplet_distances(std::uint64_t p, const PrimeTable &table);

/// 4 sin(theta): half of base 4 times height 2 sin(theta).
double triangle_area(double theta);

struct LatticeNode {
    int tier;  // 0, 1, 2
    std::uint64_t value;
    friend bool operator==(const LatticeNode &, const LatticeNode &) = default;
};

struct LatticeEdge {
    LatticeNode from;
    LatticeNode to;
    std::uint64_t distance;
};

/// Three tiers holding the first, second and third members of every prime
/// triplet whose largest member is <= limit. Each triplet contributes the
/// edges tier0->tier1 (d12), tier1->tier2 (d23) and tier0->tier2 (d13).
struct LatticeGraph {
    std::uint64_t limit = 0;
    std::array<std::vector<std::uint64_t>, 3> tiers;
    std::vector<std::array<std::uint64_t, 3>> triplets;
    std::vector<LatticeEdge> edges;

    bool empty() const noexcept { return triplets.empty(); }
    bool contains(std::uint64_t value) const;
};

/// Requires table.limit() >= limit + 6 (throws ArgumentError otherwise).
LatticeGraph build_lattice(std::uint64_t limit, const PrimeTable &table);

struct TriggerReport {
    std::uint64_t input = 0;
    bool fired = false;
    std::uint64_t depth_reached = 0;
    std::uint64_t cap = 0;
};

/// Fires when `value` is prime and a lattice node, then recurses on itself
/// until the depth guard reaches `cap` (>= 1, else ArgumentError).
TriggerReport trapdoor_trigger(std::uint64_t value, const LatticeGraph &lattice, const PrimeTable &table,
                               std::uint64_t cap = kDefaultTriggerCap);

}  // namespace qrw::primes
