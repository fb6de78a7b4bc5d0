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
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace qrw::inference {

/// Immutable logic term: atom, variable, integer, or compound. Copies share
/// structure. A default-constructed Term is empty and only used as the
/// "unbound" marker inside binding tables.
class Term {
   public:
    enum class Kind { Atom, Variable, Integer, Compound };

    Term() = default;

    static Term atom(std::string name);
    static Term variable(std::size_t id, std::string name = {});
    static Term integer(std::int64_t value);
    static Term compound(std::string functor, std::vector<Term> args);
    /// Proper list of `items` ending in `tail` (the empty list by default).
    static Term list(std::vector<Term> items, Term tail = Term::atom("[]"));

    bool empty() const noexcept { return node_ == nullptr; }
    Kind kind() const noexcept { return node_->kind; }
    bool is_atom() const noexcept { return node_ && node_->kind == Kind::Atom; }
    bool is_variable() const noexcept { return node_ && node_->kind == Kind::Variable; }
    bool is_integer() const noexcept { return node_ && node_->kind == Kind::Integer; }
    bool is_compound() const noexcept { return node_ && node_->kind == Kind::Compound; }
    bool is_callable() const noexcept { return is_atom() || is_compound(); }
    bool is_atom(std::string_view name) const noexcept { return is_atom() && node_->text == name; }
    bool is_compound(std::string_view functor, std::size_t arity) const noexcept {
        return is_compound() && node_->args.size() == arity && node_->text == functor;
    }

    /// Atom name, compound functor, or variable name.
    const std::string &name() const noexcept { return node_->text; }
    std::size_t var_id() const noexcept { return node_->id; }
    std::int64_t value() const noexcept { return node_->value; }
    const std::vector<Term> &args() const noexcept { return node_->args; }
    std::size_t arity() const noexcept { return is_compound() ? node_->args.size() : 0; }
    const Term &arg(std::size_t i) const { return node_->args.at(i); }

    /// "name/arity" for callable terms.
    std::string indicator() const;

    /// Structural equality (variables compare by id).
    friend bool operator==(const Term &a, const Term &b);

    /// Identity of the shared node; used for cheap equality shortcuts.
    const void *identity() const noexcept { return node_.get(); }

   private:
    struct Node {
        Kind kind;
        std::string text;
        std::int64_t value = 0;
        std::size_t id = 0;
        std::vector<Term> args;
    };
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Collects the elements of a proper list; returns false for partial or
/// improper lists.
bool list_items(const Term &list, std::vector<Term> &out);

/// Renders a term in operator syntax, quoting atoms where needed. Unbound
/// variables print by name, or as _G<id> when anonymous.
std::string to_string(const Term &term);

}  // namespace qrw::inference
