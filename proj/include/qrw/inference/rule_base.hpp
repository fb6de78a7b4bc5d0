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
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qrw/inference/term.hpp"

namespace qrw::inference {

/// Clause namespaces used by the knowledge base. Any other module qualifier
/// is kept verbatim as the namespace string.
inline constexpr std::string_view kFactNamespace = "fact";
inline constexpr std::string_view kParseNamespace = "parse";
inline constexpr std::string_view kUnqualified = "";

struct Clause {
    Term head;
    /// Top-level conjuncts of the body; empty for facts.
    std::vector<Term> body;
    std::string ns;
    /// Variables are numbered 0..var_count-1 within the clause.
    std::size_t var_count = 0;
    std::size_t line = 0;
    /// linear_head_vars[i]: variable i occurs exactly once in the head.
    /// Filled in by RuleBase::add.
    std::vector<bool> linear_head_vars;
};

/// Ordered clause store. Queries only read it; `add`/`retract_all` need
/// exclusive access and bump `revision()`.
class RuleBase {
   public:
    const std::vector<Clause> &clauses() const noexcept { return clauses_; }
    std::size_t size() const noexcept { return clauses_.size(); }
    std::uint64_t revision() const noexcept { return revision_; }

    void add(Clause clause);

    /// Appends every clause in `source`. Handles `:- op(P, T, Name)`
    /// directives and translates `-->` rules.
    void add_source(std::string_view source);

    /// Removes clauses for name/arity in `ns` ("" matches any namespace).
    std::size_t retract_all(const std::string &name, std::size_t arity, std::string_view ns = kUnqualified);

    /// Indices of clauses for name/arity, in source order.
    const std::vector<std::size_t> &lookup(const std::string &name, std::size_t arity) const;

   private:
    void reindex();

    std::vector<Clause> clauses_;
    std::uint64_t revision_ = 0;
    std::unordered_map<std::string, std::vector<std::size_t>> index_;
};

/// Parses rule text (one clause per line in the fixture format, `%`
/// comments). Throws ParseError with line/column on malformed input.
RuleBase load_rules(std::string_view source);
RuleBase load_rules_file(const std::filesystem::path &path);

/// Converts a read term into a clause (splitting `:-`, stripping a module
/// qualifier from the head into `ns`). Throws ArgumentError for variable or
/// numeric heads.
Clause make_clause(const Term &term, std::size_t var_count, std::size_t line = 0);

}  // namespace qrw::inference
