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

#include "qrw/inference/expert.hpp"

#include <cstdlib>
#include <map>
#include <string>

#include "qrw/error.hpp"

#ifndef QRW_SOURCE_DIR
#define QRW_SOURCE_DIR "."
#endif

namespace qrw::inference {
namespace {

// Maps every variable of `t` to a query variable numbered from `names.size()`.
Term number_vars(const Term &t, std::map<std::size_t, std::size_t> &ids, std::vector<std::string> &names,
                 const std::string &prefix) {
    if (t.is_variable()) {
        auto it = ids.find(t.var_id());
        if (it == ids.end()) {
            it = ids.emplace(t.var_id(), names.size()).first;
            names.push_back(prefix + std::to_string(names.size()));
        }
        return Term::variable(it->second, names[it->second]);
    }
    if (t.is_compound()) {
        std::vector<Term> args;
        for (const Term &a : t.args()) {
            args.push_back(number_vars(a, ids, names, prefix));
        }
        return Term::compound(t.name(), std::move(args));
    }
    return t;
}

Term substitute(const Term &t, const std::vector<Term> &values) {
    if (t.is_variable()) {
        return t.var_id() < values.size() ? values[t.var_id()] : t;
    }
    if (t.is_compound()) {
        std::vector<Term> args;
        for (const Term &a : t.args()) {
            args.push_back(substitute(a, values));
        }
        return Term::compound(t.name(), std::move(args));
    }
    return t;
}

std::size_t variable_span(const Term &t) {
    if (t.is_variable()) {
        return t.var_id() + 1;
    }
    std::size_t n = 0;
    if (t.is_compound()) {
        for (const Term &a : t.args()) {
            n = std::max(n, variable_span(a));
        }
    }
    return n;
}

Term bar(const char *tag, Term value) { return Term::compound("|", {Term::atom(tag), std::move(value)}); }

}  // namespace

Classification classify(const RuleBase &rules, const Term &syn, const Term &udp, const Term &ipa,
                        const QueryOptions &options) {
    std::map<std::size_t, std::size_t> ids;
    std::vector<std::string> names;
    const Term shape = Term::compound("classification", {bar("syn", number_vars(syn, ids, names, "V")),
                                                         bar("udp", number_vars(udp, ids, names, "V")),
                                                         bar("ipa", number_vars(ipa, ids, names, "V"))});
    const Term goal = Term::compound(":", {Term::atom("parse"), Term::compound("output", {shape})});
    const QueryResult result = query(rules, goal, names, options);

    Classification out;
    out.truncated = result.truncated;
    for (const Solution &s : result.solutions) {
        std::vector<Term> values;
        for (const auto &binding : s.bindings) {
            values.push_back(binding.second);
        }
        out.alternatives.push_back(substitute(shape, values));
    }
    if (out.alternatives.empty()) {
        out.term = Term::compound("classification", {Term::atom("unknown")});
        out.unknown = true;
    } else {
        out.term = out.alternatives.front();
    }
    return out;
}

Classification classify(const RuleBase &rules, const QueryOptions &options) {
    return classify(rules, Term::variable(0, "X"), Term::variable(1, "Y"), Term::variable(2, "Z"), options);
}

std::vector<Term> gather_args(const RuleBase &rules, const std::vector<Term> &spec,
                              const std::vector<std::pair<Term, Term>> &hooks) {
    RuleBase augmented = rules;
    for (const auto &[from, to] : hooks) {
        const Term fact = Term::compound("unknown", {Term::compound("port", {from, to})});
        augmented.add(make_clause(fact, variable_span(fact)));
    }

    std::map<std::size_t, std::size_t> ids;
    std::vector<std::string> names{"Out"};
    std::vector<Term> items;
    for (const Term &t : spec) {
        items.push_back(number_vars(t, ids, names, "_A"));
    }
    const Term goal =
        Term::compound("gather_args", {Term::list(items), Term::variable(0, "Out")});
    QueryOptions options;
    options.max_solutions = 1;
    const QueryResult result = query(augmented, goal, names, options);
    if (!result.solutions.empty()) {
        std::vector<Term> values;
        if (list_items(*result.solutions.front().get("Out"), values)) {
            return values;
        }
    }
    for (const Term &t : spec) {
        if (!t.is_compound("+", 1)) {
            continue;
        }
        std::vector<std::string> probe_names{"_"};
        std::map<std::size_t, std::size_t> probe_ids;
        const Term inner = number_vars(t.arg(0), probe_ids, probe_names, "_P");
        const Term probe =
            Term::compound("unknown", {Term::compound("port", {inner, Term::variable(0, "_")})});
        if (query(augmented, probe, probe_names, options).solutions.empty()) {
            throw ResolutionError("no resolution for " + to_string(t));
        }
    }
    throw ResolutionError("gather_args has no solution for " + to_string(Term::list(spec)));
}

std::filesystem::path default_rules_path() {
    if (const char *dir = std::getenv("QRW_FIXTURE_DIR"); dir && *dir) {
        return std::filesystem::path(dir) / "quine.rules";
    }
    return std::filesystem::path(QRW_SOURCE_DIR) / "fixtures" / "quine.rules";
}

const std::vector<DeadClause> &dead_clauses() {
    static const std::vector<DeadClause> table = {
        {70, "calls asserta/1, which has no clauses"},
        {72, "calls retractall/1, which has no clauses"},
        {75, "calls strip_module/3, which has no clauses"},
        {87, "calls '$dde_request'/1, which has no clauses"},
        {95, "calls on_signal/3, which has no clauses"},
        {96, "calls '$append'/3, which has no clauses"},
        {97, "calls rl_read_history/1, which has no clauses"},
        {101, "unreachable: the preceding '$dde_request'/4 clause throws for every call"},
        {102, "unreachable: the preceding '$dde_request'/4 clause throws for every call"},
        {103, "unreachable: the preceding '$dde_request'/4 clause throws for every call"},
        {104, "unreachable: the preceding '$dde_request'/4 clause throws for every call"},
        {117, "~/1 is the builtin negation; this clause is never consulted"},
        {118, "~/1 is the builtin negation; this clause is never consulted"},
        {130, "calls f/2; the listing only defines f/3 and f/4"},
        {144, "calls f/2; the listing only defines f/3 and f/4"},
        {149, "calls f/2; the listing only defines f/3 and f/4"},
    };
    return table;
}

}  // namespace qrw::inference
