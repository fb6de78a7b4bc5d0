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

#include "qrw/inference/best_first.hpp"
#include "support/oracles.hpp"

namespace qrw::inference {
namespace {

TEST(BestFirst, StartIsGoal) {
    SearchGraph g{{{}}, {0.0}, {true}};
    const auto r = best_first(g, 0);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->path, std::vector<std::size_t>{0});
    EXPECT_EQ(r->cost, 0.0);
}

TEST(BestFirst, DiamondWithZeroHeuristic) {
    SearchGraph g;
    g.successors = {{{1, 1.0}, {2, 4.0}}, {{3, 5.0}}, {{3, 1.0}}, {}};
    g.heuristic = {0, 0, 0, 0};
    g.goal = {false, false, false, true};
    const auto r = best_first(g, 0);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->cost, oracle::dijkstra(g, 0));
    EXPECT_EQ(r->path, (std::vector<std::size_t>{0, 2, 3}));
}

TEST(BestFirst, NoGoalReachable) {
    SearchGraph g{{{{1, 1.0}}, {{0, 1.0}}, {}}, {0, 0, 0}, {false, false, true}};
    EXPECT_FALSE(best_first(g, 0).has_value());
}

TEST(BestFirst, ValidateRejectsBadGraphs) {
    SearchGraph g{{{{5, 1.0}}}, {0.0}, {false}};
    EXPECT_THROW(g.validate(), ArgumentError);
    SearchGraph neg{{{{0, -1.0}}}, {0.0}, {false}};
    EXPECT_THROW(neg.validate(), ArgumentError);
    SearchGraph mismatch{{{}, {}}, {0.0}, {false, true}};
    EXPECT_THROW(mismatch.validate(), ArgumentError);
}

TEST(BestFirst, OptimalOnRandomAdmissibleInstances) {
    std::mt19937_64 rng(77);
    int solved = 0;
    for (int i = 0; i < 100; ++i) {
        const SearchGraph g = oracle::random_search_graph(rng);
        const double expected = oracle::dijkstra(g, 0);
        const auto r = best_first(g, 0);
        if (!std::isfinite(expected) || expected > kSearchBound) {
            EXPECT_FALSE(r.has_value()) << "instance " << i;
            continue;
        }
        ASSERT_TRUE(r.has_value()) << "instance " << i;
        EXPECT_EQ(r->cost, expected) << "instance " << i;
        EXPECT_EQ(r->path.front(), 0u);
        EXPECT_TRUE(g.goal[r->path.back()]);
        double walked = 0.0;
        for (std::size_t k = 0; k + 1 < r->path.size(); ++k) {
            double best = oracle::kUnreachable;
            for (const auto &e : g.successors[r->path[k]]) {
                if (e.to == r->path[k + 1]) {
                    best = std::min(best, e.cost);
                }
            }
            walked += best;
        }
        EXPECT_EQ(walked, r->cost);
        ++solved;
    }
    EXPECT_GT(solved, 50);
}

}  // namespace
}  // namespace qrw::inference
