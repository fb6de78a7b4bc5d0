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

#include <random>
#include <vector>

#include "qrw/kernels/kernels.hpp"

namespace qrw::kernels {
namespace {

std::vector<Complex> random_amps(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> d;
    std::vector<Complex> v(n);
    for (auto &z : v) {
        z = {d(rng), d(rng)};
    }
    return v;
}

double max_diff(const std::vector<Complex> &a, const std::vector<Complex> &b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

class KernelEquivalence : public ::testing::Test {
   protected:
    void SetUp() override {
        vec = avx2_kernels();
        if (vec == nullptr) {
            GTEST_SKIP() << "AVX2 variant not available on this host";
        }
    }
    const KernelSet &ref = scalar_kernels();
    const KernelSet *vec = nullptr;
    std::mt19937_64 rng{12345};
};

TEST(KernelDispatch, ActiveSetIsOneOfTheKnownSets) {
    const KernelSet &active = active_kernels();
    EXPECT_TRUE(&active == &scalar_kernels() || &active == avx2_kernels());
}

TEST_F(KernelEquivalence, ApplyMatrixMatchesScalarOnEveryTarget) {
    for (unsigned n = 1; n <= 10; ++n) {
        for (unsigned t = 0; t < n; ++t) {
            const auto base = random_amps(std::size_t{1} << n, rng);
            const Matrix2 m{{0.3, -0.2}, {0.1, 0.7}, {-0.5, 0.4}, {0.9, 0.05}};
            auto a = base, b = base;
            ref.apply_matrix(a, t, m);
            vec->apply_matrix(b, t, m);
            EXPECT_LT(max_diff(a, b), 1e-13) << "n=" << n << " t=" << t;
        }
    }
}

TEST_F(KernelEquivalence, CnotAndPhaseMatchScalar) {
    for (unsigned n = 2; n <= 9; ++n) {
        for (unsigned c = 0; c < n; ++c) {
            for (unsigned t = 0; t < n; ++t) {
                if (c == t) {
                    continue;
                }
                const auto base = random_amps(std::size_t{1} << n, rng);
                auto a = base, b = base;
                ref.apply_cnot(a, c, t);
                vec->apply_cnot(b, c, t);
                EXPECT_EQ(a, b);
                const std::uint64_t mask = (std::uint64_t{1} << c) | (std::uint64_t{1} << t);
                const Complex phase = std::polar(1.0, -0.7);
                ref.apply_phase(a, mask, phase);
                vec->apply_phase(b, mask, phase);
                EXPECT_LT(max_diff(a, b), 1e-14);
            }
        }
    }
}

TEST_F(KernelEquivalence, ReductionsAndCollapseMatchScalar) {
    for (unsigned n = 1; n <= 11; ++n) {
        const auto base = random_amps(std::size_t{1} << n, rng);
        std::vector<double> pa(base.size()), pb(base.size());
        ref.probabilities(base, pa);
        vec->probabilities(base, pb);
        for (std::size_t i = 0; i < pa.size(); ++i) {
            EXPECT_NEAR(pa[i], pb[i], 1e-13 * (1.0 + pa[i]));
        }
        const double na = ref.norm_squared(base);
        EXPECT_NEAR(na, vec->norm_squared(base), 1e-12 * na);
        for (unsigned q = 0; q < n; ++q) {
            const double p1 = ref.probability_of_one(base, q);
            EXPECT_NEAR(p1, vec->probability_of_one(base, q), 1e-12 * na);
            auto a = base, b = base;
            ref.collapse(a, q, true, 0.5);
            vec->collapse(b, q, true, 0.5);
            EXPECT_LT(max_diff(a, b), 1e-14);
        }
    }
}

TEST_F(KernelEquivalence, LeapfrogMatchesScalar) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (std::size_t n : {3u, 4u, 5u, 7u, 8u, 9u, 31u, 64u, 1001u}) {
        std::vector<double> prev(n), cur(n), na(n, 9.0), nb(n, -9.0);
        for (std::size_t i = 0; i < n; ++i) {
            prev[i] = u(rng);
            cur[i] = u(rng);
        }
        ref.leapfrog_step(prev, cur, na, 0.25);
        vec->leapfrog_step(prev, cur, nb, 0.25);
        EXPECT_EQ(na.front(), 0.0);
        EXPECT_EQ(nb.back(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_NEAR(na[i], nb[i], 1e-14) << "n=" << n << " i=" << i;
        }
    }
}

TEST(ScalarKernels, LeapfrogStencilByHand) {
    const std::vector<double> prev{0, 1, 2, 3, 0}, cur{0, 2, 4, 1, 0};
    std::vector<double> next(5, 7.0);
    scalar_kernels().leapfrog_step(prev, cur, next, 0.5);
    EXPECT_DOUBLE_EQ(next[0], 0.0);
    EXPECT_DOUBLE_EQ(next[1], 2 * 2 - 1 + 0.5 * (4 - 4 + 0));
    EXPECT_DOUBLE_EQ(next[2], 2 * 4 - 2 + 0.5 * (1 - 8 + 2));
    EXPECT_DOUBLE_EQ(next[3], 2 * 1 - 3 + 0.5 * (0 - 2 + 4));
    EXPECT_DOUBLE_EQ(next[4], 0.0);
}

}  // namespace
}  // namespace qrw::kernels
