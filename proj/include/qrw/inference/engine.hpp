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
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qrw/error.hpp"
#include "qrw/inference/rule_base.hpp"
#include "qrw/inference/term.hpp"

namespace qrw::inference {

inline constexpr std::size_t kDefaultDepthLimit = 4096;

struct QueryOptions {
    /// Maximum nesting of clause expansions along one branch. Branches that
    /// would go deeper are cut off and the result is flagged truncated.
    std::size_t depth_limit = kDefaultDepthLimit;
    std::size_t max_solutions = std::numeric_limits<std::size_t>::max();
    /// When set, resized to the clause count and incremented for every
    /// clause whose head unifies with a call.
    std::vector<std::size_t> *clause_hits = nullptr;
};

/// Bindings of the query's named variables for one solution, in order of
/// first appearance in the goal. Unbound variables appear as variables.
struct Solution {
    std::vector<std::pair<std::string, Term>> bindings;

    /// Binding of `name`, or nullptr if the goal has no such variable.
    const Term *get(std::string_view name) const;
};

struct QueryResult {
    std::vector<Solution> solutions;
    /// Some branch hit the depth limit, so `solutions` may be incomplete.
    bool truncated = false;
    /// Text produced by write/1 and nl/0.
    std::string output;

    bool complete() const noexcept { return !truncated; }
};

/// A term raised with throw/1 (or by a builtin) that no goal caught.
class UncaughtThrow : public Error {
   public:
    explicit UncaughtThrow(Term ball) : Error("uncaught", "uncaught " + to_string(ball)), ball_(std::move(ball)) {}
    const Term &ball() const noexcept { return ball_; }

   private:
    Term ball_;
};

/// Depth-first backward chaining with unification (occurs check on), clause
/// order as written, cut, if-then-else, negation as failure (`\+`, `not`,
/// `~`), module-qualified goals, and a small builtin set (unification and
/// comparison, integer arithmetic, type tests, =.., functor/3, arg/3,
/// findall/3, call/N, throw/1, write/1, nl/0).
///
/// An unqualified goal resolves against clauses of every namespace; `ns:Goal`
/// only against clauses loaded under `ns`. Calls to predicates with no clauses
/// fail. Variables of `goal` are numbered 0..n-1 with names `variable_names`.
QueryResult query(const RuleBase &rules, const Term &goal, std::span<const std::string> variable_names,
                  const QueryOptions &options = {});

/// Parses `goal_text` (trailing '.' optional) and runs it.
QueryResult query(const RuleBase &rules, std::string_view goal_text, const QueryOptions &options = {});

/// True for control constructs and builtins handled by the engine itself;
/// clauses defining them are never consulted.
bool is_builtin(std::string_view name, std::size_t arity);

/// Most general unifier of two terms as a map from variable id to its fully
/// resolved value; nullopt when they do not unify.
std::optional<std::map<std::size_t, Term>> unify(const Term &a, const Term &b);

}  // namespace qrw::inference
