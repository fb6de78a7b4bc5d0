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

#include <cstddef>
#include <optional>
#include <vector>

namespace qrw::inference {

inline constexpr double kSearchBound = 9999.0;

struct SearchEdge {
    std::size_t to;
    double cost;
};

/// Directed graph over nodes 0..size()-1 with a heuristic estimate and a
/// goal flag per node.
struct SearchGraph {
    std::vector<std::vector<SearchEdge>> successors;
    std::vector<double> heuristic;
    std::vector<bool> goal;

    std::size_t size() const noexcept { return successors.size(); }
    /// Throws ArgumentError on size mismatches, dangling edges, or negative
    /// or non-finite costs/estimates.
    void validate() const;
};

struct SearchResult {
    /// Start first, goal last.
    std::vector<std::size_t> path;
    double cost = 0.0;
};

/// Best-first (A*) search over a tree of partial paths with contour bounds:
/// a subtree is expanded while its f = g + h stays within the bound set by
/// the best alternative, starting from 9999. Cycles along a path are pruned;
/// successors of equal f keep their generation order. Returns nullopt when
/// no goal is reachable within the bound.
std::optional<SearchResult> best_first(const SearchGraph &graph, std::size_t start);

}  // namespace qrw::inference
