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

#include <filesystem>
#include <utility>
#include <vector>

#include "qrw/inference/engine.hpp"
#include "qrw/inference/rule_base.hpp"
#include "qrw/inference/term.hpp"

namespace qrw::inference {

/// Outcome of the expert system's classification query
/// `parse:output(classification(syn|S, udp|U, ipa|I))`.
struct Classification {
    /// First derived classification, or `classification(unknown)`.
    Term term;
    bool unknown = false;
    /// Every derived classification in resolution order.
    std::vector<Term> alternatives;
    /// The deep input/3 recursion reached the depth limit on some branch.
    bool truncated = false;
};

/// Classifies a (syn, udp, ipa) observation. Arguments may be atoms or
/// variables (Term::variable with any id); variables are bound where the
/// rules derive a value.
Classification classify(const RuleBase &rules, const Term &syn, const Term &udp, const Term &ipa,
                         const QueryOptions &options = {});

/// Classification over three fresh variables.
Classification classify(const RuleBase &rules, const QueryOptions &options = {});

/// Runs the knowledge base's gather_args/2 over `spec`. Elements of the form
/// `+T` are resolved through `unknown(port(T, V))`; `hooks` supplies extra
/// (T, V) facts for that predicate. Throws ResolutionError naming the first
/// `+T` with no resolution.
std::vector<Term> gather_args(const RuleBase &rules, const std::vector<Term> &spec,
                              const std::vector<std::pair<Term, Term>> &hooks = {});

/// Path of the bundled knowledge base (fixtures/quine.rules), taken from the
/// QRW_FIXTURE_DIR environment variable or the source tree.
std::filesystem::path default_rules_path();

/// Knowledge base clauses that no query can reach or that can never
/// succeed under this engine, as (source line, reason). Clauses not listed
/// here are exercised by the test suite.
struct DeadClause {
    std::size_t line;
    const char *reason;
};
const std::vector<DeadClause> &dead_clauses();

}  // namespace qrw::inference
