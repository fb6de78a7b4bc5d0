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

#include "qrw/primes/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qrw/error.hpp"

namespace qrw::primes {

std::optional<TripletDistances> triplet_distances(std::uint64_t p, const PrimeTable &table) {
    if (!table.is_prime(p)) {
        return std::nullopt;
    }
    static constexpr std::array<std::array<std::uint64_t, 2>, 3> kPatterns = {{{2, 4}, {2, 6}, {4, 6}}};
    for (const auto &[second, third] : kPatterns) {
        if (table.is_prime(p + second) && table.is_prime(p + third)) {
            return TripletDistances{second, third - second, third};
        }
    }
    return std::nullopt;
}

double triangle_area(double theta) { return 0.5 * 4.0 * (2.0 * std::sin(theta)); }

bool LatticeGraph::contains(std::uint64_t value) const {
    return std::any_of(tiers.begin(), tiers.end(),
                       [&](const auto &tier) { return std::find(tier.begin(), tier.end(), value) != tier.end(); });
}

LatticeGraph build_lattice(std::uint64_t limit, const PrimeTable &table) {
    if (table.limit() < limit + 6) {
        throw ArgumentError("prime table must cover limit + 6 = " + std::to_string(limit + 6));
    }
    LatticeGraph g;
    g.limit = limit;
    for (std::uint32_t p : table.primes()) {
        if (p + 4 > limit) {
            break;
        }
        const auto d = triplet_distances(p, table);
        if (!d || p + d->d13 > limit) {
            continue;
        }
        const std::array<std::uint64_t, 3> t{p, p + d->d12, p + d->d13};
        g.triplets.push_back(t);
        for (int k = 0; k < 3; ++k) {
            g.tiers[k].push_back(t[k]);
        }
        g.edges.push_back({{0, t[0]}, {1, t[1]}, d->d12});
        g.edges.push_back({{1, t[1]}, {2, t[2]}, d->d23});
        g.edges.push_back({{0, t[0]}, {2, t[2]}, d->d13});
    }
    return g;
}

TriggerReport trapdoor_trigger(std::uint64_t value, const LatticeGraph &lattice, const PrimeTable &table,
                               std::uint64_t cap) {
    if (cap < 1) {
        throw ArgumentError("trigger cap must be at least 1");
    }
    TriggerReport report{value, false, 0, cap};
    const bool prime = value <= table.limit() ? table.is_prime(value) : false;
    if (prime && lattice.contains(value)) {
        report.fired = true;
        // The self-call is a tail call; it is written as the equivalent loop
        // so that the guard, not the stack, bounds it.
        while (report.depth_reached < cap) {
            ++report.depth_reached;
        }
    }
    return report;
}

}  // namespace qrw::primes
