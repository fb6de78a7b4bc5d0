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

#include "qrw/inference/best_first.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qrw/error.hpp"

namespace qrw::inference {

void SearchGraph::validate() const {
    if (heuristic.size() != size() || goal.size() != size()) {
        throw ArgumentError("search graph: heuristic and goal tables must cover every node");
    }
    for (std::size_t n = 0; n < size(); ++n) {
        if (!std::isfinite(heuristic[n]) || heuristic[n] < 0.0) {
            throw ArgumentError("search graph: heuristic of node " + std::to_string(n) + " must be finite and >= 0");
        }
        for (const SearchEdge &e : successors[n]) {
            if (e.to >= size()) {
                throw ArgumentError("search graph: edge from " + std::to_string(n) + " to unknown node");
            }
            if (!std::isfinite(e.cost) || e.cost < 0.0) {
                throw ArgumentError("search graph: edge cost from " + std::to_string(n) + " must be finite and >= 0");
            }
        }
    }
}

namespace {

// l(N, F/G) when `leaf`, otherwise t(N, F/G, Subtrees).
struct Tree {
    std::size_t node;
    double f;
    double g;
    bool leaf = true;
    std::vector<Tree> subtrees;
};

enum class Solved { Yes, No, Never };

double bestf(const std::vector<Tree> &ts) { return ts.empty() ? kSearchBound : ts.front().f; }

void insert(Tree t, std::vector<Tree> &ts) {
    auto pos = std::find_if(ts.begin(), ts.end(), [&](const Tree &other) { return t.f <= other.f; });
    ts.insert(pos, std::move(t));
}

class Search {
   public:
    Search(const SearchGraph &graph, std::size_t start)
        : graph_(graph), best_g_(graph.size(), std::numeric_limits<double>::infinity()) {
        best_g_[start] = 0.0;
    }

    // path holds the ancestors of the tree's root, nearest last.
    Solved expand(std::vector<std::size_t> &path, Tree &tree, double bound, std::vector<std::size_t> &solution) {
        if (tree.leaf && graph_.goal[tree.node]) {
            solution = path;
            solution.push_back(tree.node);
            cost_ = tree.g;
            return Solved::Yes;
        }
        if (tree.leaf) {
            if (tree.f > bound) {
                return Solved::No;
            }
            std::vector<Tree> ts;
            // succlist builds from the tail, so later successors are inserted
            // first.
            const auto &succ = graph_.successors[tree.node];
            for (auto it = succ.rbegin(); it != succ.rend(); ++it) {
                if (it->to == tree.node || std::find(path.begin(), path.end(), it->to) != path.end()) {
                    continue;
                }
                const double g = tree.g + it->cost;
                // A node already reached at no greater cost dominates this route.
                if (g >= best_g_[it->to]) {
                    continue;
                }
                best_g_[it->to] = g;
                insert(Tree{it->to, g + graph_.heuristic[it->to], g, true, {}}, ts);
            }
            if (ts.empty()) {
                return Solved::Never;
            }
            tree.leaf = false;
            tree.f = bestf(ts);
            tree.subtrees = std::move(ts);
        }
        for (;;) {
            if (tree.subtrees.empty()) {
                return Solved::Never;
            }
            if (tree.f > bound) {
                return Solved::No;
            }
            const double bound1 = std::min(bound, bestf({tree.subtrees.begin() + 1, tree.subtrees.end()}));
            Tree first = std::move(tree.subtrees.front());
            tree.subtrees.erase(tree.subtrees.begin());
            path.push_back(tree.node);
            const Solved solved1 = expand(path, first, bound1, solution);
            path.pop_back();
            if (solved1 == Solved::Yes) {
                return Solved::Yes;
            }
            if (solved1 == Solved::No) {
                insert(std::move(first), tree.subtrees);
            }
            tree.f = bestf(tree.subtrees);
        }
    }

    double cost() const noexcept { return cost_; }

   private:
    const SearchGraph &graph_;
    std::vector<double> best_g_;
    double cost_ = 0.0;
};

}  // namespace

std::optional<SearchResult> best_first(const SearchGraph &graph, std::size_t start) {
    graph.validate();
    if (start >= graph.size()) {
        throw ArgumentError("best_first: start node " + std::to_string(start) + " out of range");
    }
    Tree root{start, 0.0, 0.0, true, {}};
    std::vector<std::size_t> path;
    std::vector<std::size_t> solution;
    Search search(graph, start);
    if (search.expand(path, root, kSearchBound, solution) != Solved::Yes) {
        return std::nullopt;
    }
    return SearchResult{std::move(solution), search.cost()};
}

}  // namespace qrw::inference
