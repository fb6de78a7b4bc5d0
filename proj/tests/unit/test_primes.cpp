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

#include <gtest/gtest.h>

#include <boost/math/special_functions/expint.hpp>
#include <cmath>
#include <map>

#include "qrw/error.hpp"
#include "qrw/primes/lattice.hpp"
#include "qrw/primes/log_integral.hpp"
#include "qrw/primes/prime_table.hpp"
#include "support/oracles.hpp"

namespace qrw::primes {
namespace {

TEST(Sieve, AgreesWithTrialDivisionTo10k) {
    const PrimeTable t = sieve(10'000);
    for (std::uint64_t n = 0; n <= 10'000; ++n) {
        ASSERT_EQ(t.is_prime(n), oracle::is_prime_trial(n)) << n;
    }
    for (std::uint32_t p : t.primes()) {
        EXPECT_TRUE(oracle::is_prime_trial(p));
    }
    EXPECT_EQ(t.pi(100), 25u);
    EXPECT_EQ(sieve(2).primes(), std::vector<std::uint32_t>{2});
}

TEST(Sieve, PiOfAMillionMatchesSegmentedCount) {
    const PrimeTable t = sieve(1'000'000);
    EXPECT_EQ(t.pi(1'000'000), 78'498u);
    EXPECT_EQ(t.pi(1'000'000), oracle::segmented_pi(1'000'000));
    std::uint64_t last = 0;
    for (std::uint64_t n = 0; n <= 1'000'000; n += 997) {
        const std::uint64_t v = t.pi(n);
        EXPECT_GE(v, last);
        last = v;
    }
}

TEST(Sieve, RangeAndDomainErrors) {
    EXPECT_THROW(sieve(1), ArgumentError);
    EXPECT_THROW(sieve(kMaxSieveLimit + 1), ArgumentError);
    EXPECT_THROW(sieve(100).is_prime(101), DomainError);
}

double li_reference(double n) {
    return boost::math::expint(std::log(n)) - boost::math::expint(std::log(2.0));
}

TEST(LogIntegral, MatchesExponentialIntegral) {
    EXPECT_EQ(li(2.0), 0.0);
    for (double n : {2.5, 3.0, 10.0, 100.0, 1000.0, 12345.6, 1e6, 1e8}) {
        EXPECT_NEAR(li(n), li_reference(n), 1e-8 * std::max(1.0, li_reference(n))) << n;
    }
    EXPECT_NEAR(li(1000.0), 176.6, 0.5);
    EXPECT_THROW(li(1.5), DomainError);
    EXPECT_THROW(li(std::nan("")), DomainError);
}

TEST(LogIntegral, PositiveAndIncreasing) {
    double prev = 0.0;
    for (double n = 2.5; n < 1e5; n *= 1.37) {
        const double v = li(n);
        EXPECT_GT(v, prev);
        prev = v;
    }
}

TEST(LogIntegral, RatioToPiImprovesByDecade) {
    const PrimeTable t = sieve(1'000'000);
    double previous_gap = 1.0;
    for (std::uint64_t n = 1000; n <= 1'000'000; n *= 10) {
        const double gap = std::abs(li(static_cast<double>(n)) / static_cast<double>(t.pi(n)) - 1.0);
        EXPECT_LT(gap, previous_gap) << n;
        previous_gap = gap;
    }
    EXPECT_LT(previous_gap, 0.03);
}

TEST(Triplets, Examples) {
    const PrimeTable t = sieve(1000);
    EXPECT_EQ(triplet_distances(3, t), (TripletDistances{2, 2, 4}));
    EXPECT_EQ(triplet_distances(5, t), (TripletDistances{2, 4, 6}));
    EXPECT_EQ(triplet_distances(7, t), (TripletDistances{4, 2, 6}));
    EXPECT_FALSE(triplet_distances(8, t).has_value());
    EXPECT_FALSE(triplet_distances(23, t).has_value());
}

TEST(Triplets, TriangleArea) {
    EXPECT_NEAR(triangle_area(std::numbers::pi / 2), 4.0, 1e-15);
    EXPECT_EQ(triangle_area(0.0), 0.0);
    EXPECT_NEAR(triangle_area(std::numbers::pi / 6), 2.0, 1e-15);
}

TEST(Lattice, SmallLimits) {
    const PrimeTable t = sieve(200);
    EXPECT_TRUE(build_lattice(6, t).empty());
    const LatticeGraph g = build_lattice(10, t);
    ASSERT_EQ(g.triplets.size(), 1u);
    EXPECT_EQ(g.triplets[0], (std::array<std::uint64_t, 3>{3, 5, 7}));
    ASSERT_EQ(g.edges.size(), 3u);
    EXPECT_EQ(g.edges[0].distance, 2u);
    EXPECT_EQ(g.edges[1].distance, 2u);
    EXPECT_EQ(g.edges[2].distance, 4u);
    EXPECT_THROW(build_lattice(199, t), ArgumentError);
}

TEST(Lattice, MatchesBruteForceTo10k) {
    const PrimeTable t = sieve(10'006);
    const LatticeGraph g = build_lattice(10'000, t);
    const auto expected = oracle::brute_force_triplets(10'000);
    ASSERT_EQ(g.triplets.size(), expected.size());
    std::map<std::uint64_t, int> want;
    std::map<std::uint64_t, int> got;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        EXPECT_EQ(g.triplets[i][0], expected[i].p1);
        EXPECT_EQ(g.triplets[i][1], expected[i].p2);
        EXPECT_EQ(g.triplets[i][2], expected[i].p3);
        ++want[expected[i].p2 - expected[i].p1];
        ++want[expected[i].p3 - expected[i].p2];
        ++want[expected[i].p3 - expected[i].p1];
    }
    for (const auto &e : g.edges) {
        ++got[e.distance];
    }
    EXPECT_EQ(got, want);
    for (std::size_t i = 0; i < g.triplets.size(); ++i) {
        const auto d = triplet_distances(g.triplets[i][0], t);
        ASSERT_TRUE(d);
        EXPECT_EQ(d->d12 + d->d23, d->d13);
    }
}

TEST(Trapdoor, FiresOnlyOnLatticePrimes) {
    const PrimeTable t = sieve(10'006);
    const LatticeGraph small = build_lattice(50, t);
    EXPECT_FALSE(trapdoor_trigger(4, small, t).fired);
    EXPECT_EQ(trapdoor_trigger(4, small, t).depth_reached, 0u);
    const auto five = trapdoor_trigger(5, small, t, 100);
    EXPECT_TRUE(five.fired);
    EXPECT_EQ(five.depth_reached, 100u);
    EXPECT_FALSE(trapdoor_trigger(97, small, t).fired);
    EXPECT_THROW(trapdoor_trigger(5, small, t, 0), ArgumentError);

    const LatticeGraph big = build_lattice(10'000, t);
    for (std::uint64_t v = 0; v <= 10'000; ++v) {
        const auto r = trapdoor_trigger(v, big, t, 7);
        EXPECT_LE(r.depth_reached, r.cap);
        if (r.fired) {
            ASSERT_TRUE(oracle::is_prime_trial(v)) << v;
            EXPECT_EQ(r.depth_reached, 7u);
        }
    }
}

TEST(TwinPrimes, StandardDefinition) {
    const PrimeTable t = sieve(100);
    EXPECT_TRUE(are_twin_primes(3, 5, t));
    EXPECT_TRUE(are_twin_primes(71, 73, t));
    EXPECT_FALSE(are_twin_primes(7, 11, t));
}

// {2, 5} as "the first twin pair" is a documented expected failure.
TEST(TwinPrimes, ClaimedFirstPairIsNotTwin) {
    const PrimeTable t = sieve(100);
    EXPECT_FALSE(are_twin_primes(2, 5, t));
}

}  // namespace
}  // namespace qrw::primes
