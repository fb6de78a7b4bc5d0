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

#include "qrw/inference/rule_base.hpp"

#include <fstream>
#include <sstream>

#include "qrw/error.hpp"
#include "qrw/inference/reader.hpp"

namespace qrw::inference {
namespace {

std::string key(const std::string &name, std::size_t arity) { return name + "/" + std::to_string(arity); }

void flatten_conjunction(const Term &t, std::vector<Term> &out) {
    if (t.is_compound(",", 2)) {
        flatten_conjunction(t.arg(0), out);
        flatten_conjunction(t.arg(1), out);
    } else {
        out.push_back(t);
    }
}

Term add_args(const Term &t, Term a, Term b) {
    if (t.is_atom()) {
        return Term::compound(t.name(), {std::move(a), std::move(b)});
    }
    std::vector<Term> args = t.args();
    args.push_back(std::move(a));
    args.push_back(std::move(b));
    return Term::compound(t.name(), std::move(args));
}

// Grammar-rule body translation for terminals, conjunction, {}/1, ! and
// non-terminals.
Term translate_body(const Term &body, const Term &s0, const Term &s, std::size_t &next_var) {
    if (body.is_compound(",", 2)) {
        Term mid = Term::variable(next_var++, "_");
        return Term::compound(",", {translate_body(body.arg(0), s0, mid, next_var),
                                    translate_body(body.arg(1), mid, s, next_var)});
    }
    std::vector<Term> items;
    if (body.is_atom("[]") || (body.is_compound(".", 2) && list_items(body, items))) {
        return Term::compound("=", {s0, Term::list(items, s)});
    }
    if (body.is_compound("{}", 1)) {
        return Term::compound(",", {body.arg(0), Term::compound("=", {s0, s})});
    }
    if (body.is_atom("!")) {
        return Term::compound(",", {body, Term::compound("=", {s0, s})});
    }
    if (!body.is_callable()) {
        throw ArgumentError("grammar rule body element is not callable: " + to_string(body));
    }
    return add_args(body, s0, s);
}

void count_occurrences(const Term &t, std::vector<int> &seen) {
    if (t.is_variable()) {
        if (t.var_id() >= seen.size()) {
            seen.resize(t.var_id() + 1, 0);
        }
        ++seen[t.var_id()];
    } else if (t.is_compound()) {
        for (const Term &a : t.args()) {
            count_occurrences(a, seen);
        }
    }
}

}  // namespace

Clause make_clause(const Term &term, std::size_t var_count, std::size_t line) {
    Term head = term;
    Term body = Term::atom("true");
    if (term.is_compound(":-", 2)) {
        head = term.arg(0);
        body = term.arg(1);
    } else if (term.is_compound("-->", 2)) {
        std::size_t next_var = var_count;
        Term s0 = Term::variable(next_var++, "_");
        Term s = Term::variable(next_var++, "_");
        Term grammar_head = term.arg(0);
        std::string module;
        if (grammar_head.is_compound(":", 2) && grammar_head.arg(0).is_atom()) {
            module = grammar_head.arg(0).name();
            grammar_head = grammar_head.arg(1);
        }
        body = translate_body(term.arg(1), s0, s, next_var);
        head = add_args(grammar_head, s0, s);
        if (!module.empty()) {
            head = Term::compound(":", {Term::atom(module), head});
        }
        var_count = next_var;
    }
    std::string ns;
    while (head.is_compound(":", 2) && head.arg(0).is_atom()) {
        ns = head.arg(0).name();
        head = head.arg(1);
    }
    if (!head.is_callable()) {
        throw ArgumentError("clause head must be an atom or compound: " + to_string(head));
    }
    Clause clause{head, {}, ns, var_count, line, {}};
    if (!body.is_atom("true")) {
        flatten_conjunction(body, clause.body);
    }
    return clause;
}

void RuleBase::add(Clause clause) {
    std::vector<int> seen(clause.var_count, 0);
    count_occurrences(clause.head, seen);
    clause.linear_head_vars.assign(clause.var_count, false);
    for (std::size_t i = 0; i < seen.size(); ++i) {
        clause.linear_head_vars[i] = seen[i] == 1;
    }
    index_[key(clause.head.name(), clause.head.arity())].push_back(clauses_.size());
    clauses_.push_back(std::move(clause));
    ++revision_;
}

void RuleBase::add_source(std::string_view source) {
    OperatorTable ops = OperatorTable::standard();
    // Operator directives take effect for the rest of the source.
    Reader reader(source, ops);
    while (auto read = reader.next()) {
        const Term &t = read->term;
        if (t.is_compound(":-", 1)) {
            const Term &directive = t.arg(0);
            if (directive.is_compound("op", 3) && directive.arg(0).is_integer() && directive.arg(1).is_atom() &&
                directive.arg(2).is_atom()) {
                if (auto type = parse_op_type(directive.arg(1).name())) {
                    reader.operators().add(static_cast<int>(directive.arg(0).value()), *type,
                                           directive.arg(2).name());
                    continue;
                }
            }
            throw ParseError("unsupported directive " + to_string(directive), read->line, 1);
        }
        try {
            add(make_clause(t, read->variable_names.size(), read->line));
        } catch (const ArgumentError &e) {
            throw ParseError(e.what(), read->line, 1);
        }
    }
}

std::size_t RuleBase::retract_all(const std::string &name, std::size_t arity, std::string_view ns) {
    const std::size_t before = clauses_.size();
    std::erase_if(clauses_, [&](const Clause &c) {
        return c.head.name() == name && c.head.arity() == arity && (ns.empty() || c.ns == ns);
    });
    const std::size_t removed = before - clauses_.size();
    if (removed > 0) {
        reindex();
        ++revision_;
    }
    return removed;
}

const std::vector<std::size_t> &RuleBase::lookup(const std::string &name, std::size_t arity) const {
    static const std::vector<std::size_t> none;
    auto it = index_.find(key(name, arity));
    return it == index_.end() ? none : it->second;
}

void RuleBase::reindex() {
    index_.clear();
    for (std::size_t i = 0; i < clauses_.size(); ++i) {
        index_[key(clauses_[i].head.name(), clauses_[i].head.arity())].push_back(i);
    }
}

RuleBase load_rules(std::string_view source) {
    RuleBase rules;
    rules.add_source(source);
    return rules;
}

RuleBase load_rules_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ArgumentError("cannot open rule file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_rules(buffer.str());
}

}  // namespace qrw::inference
