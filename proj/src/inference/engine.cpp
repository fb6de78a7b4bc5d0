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

#include "qrw/inference/engine.hpp"

#include <pthread.h>

#include <exception>
#include <functional>
#include <memory>
#include <set>
#include <unordered_map>

#include "qrw/inference/reader.hpp"

namespace qrw::inference {

const Term *Solution::get(std::string_view name) const {
    for (const auto &[var, value] : bindings) {
        if (var == name) {
            return &value;
        }
    }
    return nullptr;
}

namespace {

Term error_term(Term formal) { return Term::compound("error", {std::move(formal), Term::variable(0, "_")}); }

[[noreturn]] void throw_instantiation() { throw UncaughtThrow(error_term(Term::atom("instantiation_error"))); }

[[noreturn]] void throw_type(const char *type, const Term &culprit) {
    throw UncaughtThrow(error_term(Term::compound("type_error", {Term::atom(type), culprit})));
}

/// Variables in [first, first + linear->size()) flagged in `linear` occur
/// once in a freshly renamed clause head; binding them cannot close a
/// cycle, so the occurs check is skipped for them.
struct FreshHead {
    std::size_t first = 0;
    const std::vector<bool> *linear = nullptr;
    bool skip(std::size_t id) const {
        return linear && id >= first && id - first < linear->size() && (*linear)[id - first];
    }
};

/// Variable bindings with an undo trail.
class Bindings {
   public:
    void reserve_ids(std::size_t count) {
        if (slots_.size() < count) {
            slots_.resize(count);
        }
    }

    Term deref(Term t) const {
        while (t.is_variable() && t.var_id() < slots_.size() && !slots_[t.var_id()].empty()) {
            t = slots_[t.var_id()];
        }
        return t;
    }

    Term resolve(const Term &t) const {
        Term d = deref(t);
        if (!d.is_compound()) {
            return d;
        }
        std::vector<Term> args;
        args.reserve(d.arity());
        bool changed = false;
        for (const Term &a : d.args()) {
            args.push_back(resolve(a));
            changed = changed || args.back().identity() != a.identity();
        }
        return changed ? Term::compound(d.name(), std::move(args)) : d;
    }

    bool occurs(std::size_t id, const Term &t) const {
        Term d = deref(t);
        if (d.is_variable()) {
            return d.var_id() == id;
        }
        if (d.is_compound()) {
            for (const Term &a : d.args()) {
                if (occurs(id, a)) {
                    return true;
                }
            }
        }
        return false;
    }

    bool unify(const Term &a, const Term &b, FreshHead fresh = {}) {
        std::vector<std::pair<Term, Term>> stack{{a, b}};
        while (!stack.empty()) {
            auto [x, y] = stack.back();
            stack.pop_back();
            x = deref(x);
            y = deref(y);
            if (x.identity() == y.identity()) {
                continue;
            }
            if (x.is_variable()) {
                if (y.is_variable() && y.var_id() == x.var_id()) {
                    continue;
                }
                if (!fresh.skip(x.var_id()) && occurs(x.var_id(), y)) {
                    return false;
                }
                bind(x.var_id(), y);
                continue;
            }
            if (y.is_variable()) {
                if (!fresh.skip(y.var_id()) && occurs(y.var_id(), x)) {
                    return false;
                }
                bind(y.var_id(), x);
                continue;
            }
            if (x.kind() != y.kind()) {
                return false;
            }
            switch (x.kind()) {
                case Term::Kind::Atom:
                    if (x.name() != y.name()) return false;
                    break;
                case Term::Kind::Integer:
                    if (x.value() != y.value()) return false;
                    break;
                case Term::Kind::Compound:
                    if (x.arity() != y.arity() || x.name() != y.name()) return false;
                    for (std::size_t i = 0; i < x.arity(); ++i) {
                        stack.emplace_back(x.arg(i), y.arg(i));
                    }
                    break;
                case Term::Kind::Variable:
                    break;
            }
        }
        return true;
    }

    std::size_t mark() const noexcept { return trail_.size(); }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            slots_[trail_.back()] = Term();
            trail_.pop_back();
        }
    }

   private:
    void bind(std::size_t id, const Term &value) {
        reserve_ids(id + 1);
        slots_[id] = value;
        trail_.push_back(id);
    }

    std::vector<Term> slots_;
    std::vector<std::size_t> trail_;
};

Term rename(const Term &t, std::size_t offset) {
    switch (t.kind()) {
        case Term::Kind::Variable:
            return Term::variable(t.var_id() + offset);
        case Term::Kind::Compound: {
            std::vector<Term> args;
            args.reserve(t.arity());
            for (const Term &a : t.args()) {
                args.push_back(rename(a, offset));
            }
            return Term::compound(t.name(), std::move(args));
        }
        default:
            return t;
    }
}

// Renumbers the variables of `t` into fresh ids starting at `next`.
Term freshen(const Term &t, std::unordered_map<std::size_t, std::size_t> &map, std::size_t &next) {
    if (t.is_variable()) {
        auto [it, inserted] = map.emplace(t.var_id(), next);
        if (inserted) {
            ++next;
        }
        return Term::variable(it->second);
    }
    if (t.is_compound()) {
        std::vector<Term> args;
        for (const Term &a : t.args()) {
            args.push_back(freshen(a, map, next));
        }
        return Term::compound(t.name(), std::move(args));
    }
    return t;
}

struct Goal {
    Term term;
    Term ns;  // empty: any namespace
    std::size_t cut_barrier = 0;
    std::size_t depth = 0;
};

struct Cont;
using ContPtr = std::shared_ptr<const Cont>;
struct Cont {
    Goal goal;
    ContPtr next;
};

ContPtr push(Goal goal, ContPtr next) { return std::make_shared<const Cont>(Cont{std::move(goal), std::move(next)}); }

struct Signal {
    enum Kind { Next, Halt, Cut } kind = Next;
    std::size_t barrier = 0;
};

constexpr Signal kNext{Signal::Next, 0};

class Engine {
   public:
    Engine(const RuleBase &rules, const QueryOptions &options, std::size_t first_free_var)
        : rules_(rules), options_(options), next_var_(first_free_var) {
        bindings_.reserve_ids(first_free_var);
        if (options_.clause_hits) {
            options_.clause_hits->resize(rules_.size(), 0);
        }
    }

    QueryResult run(const Term &goal, std::span<const std::string> names) {
        names_ = names;
        if (options_.max_solutions == 0) {
            return std::move(result_);
        }
        const std::size_t top = ++barrier_counter_;
        solve(push(Goal{goal, Term(), top, 0}, nullptr));
        return std::move(result_);
    }

   private:
    Signal solve(const ContPtr &k) {
        if (!k) {
            record_solution();
            return result_.solutions.size() >= options_.max_solutions ? Signal{Signal::Halt, 0} : kNext;
        }
        const Goal &g = k->goal;
        const ContPtr &rest = k->next;
        const Term t = bindings_.deref(g.term);
        if (t.is_variable()) {
            throw_instantiation();
        }
        if (!t.is_callable()) {
            throw_type("callable", t);
        }
        const std::string &name = t.name();
        const std::size_t arity = t.arity();
        auto with = [&](const Term &term, const Term &ns, std::size_t barrier) {
            return Goal{term, ns, barrier, g.depth};
        };

        if (arity == 0) {
            if (name == "true") return solve(rest);
            if (name == "fail" || name == "false") return kNext;
            if (name == "!") return cut(rest, g.cut_barrier);
            if (name == "nl") {
                result_.output += "\n";
                return solve(rest);
            }
        }
        if (arity == 1 && name == "$cut") {
            return cut(rest, static_cast<std::size_t>(t.arg(0).value()));
        }
        if (arity == 2 && name == ",") {
            return solve(push(with(t.arg(0), g.ns, g.cut_barrier), push(with(t.arg(1), g.ns, g.cut_barrier), rest)));
        }
        if (arity == 2 && name == ";") {
            const Term lhs = bindings_.deref(t.arg(0));
            if (lhs.is_compound("->", 2)) {
                return if_then_else(g, lhs.arg(0), lhs.arg(1), t.arg(1), rest);
            }
            const std::size_t mark = bindings_.mark();
            Signal sig = solve(push(with(t.arg(0), g.ns, g.cut_barrier), rest));
            bindings_.undo(mark);
            if (sig.kind != Signal::Next) {
                return sig;
            }
            return solve(push(with(t.arg(1), g.ns, g.cut_barrier), rest));
        }
        if (arity == 2 && name == "->") {
            return if_then_else(g, t.arg(0), t.arg(1), Term::atom("fail"), rest);
        }
        if (arity == 1 && (name == "\\+" || name == "not" || name == "~")) {
            return negation(g, t.arg(0), rest);
        }
        if (arity >= 1 && name == "call") {
            Term callee = bindings_.deref(t.arg(0));
            if (arity > 1) {
                if (callee.is_variable()) throw_instantiation();
                if (!callee.is_callable()) throw_type("callable", callee);
                std::vector<Term> args = callee.is_compound() ? callee.args() : std::vector<Term>{};
                args.insert(args.end(), t.args().begin() + 1, t.args().end());
                callee = Term::compound(callee.name(), std::move(args));
            }
            return opaque(g, callee, g.ns, rest);
        }
        if (arity == 2 && name == ":") {
            const Term module = bindings_.deref(t.arg(0));
            if (module.is_variable()) throw_instantiation();
            if (!module.is_atom()) throw_type("atom", module);
            return solve(push(Goal{t.arg(1), module, g.cut_barrier, g.depth}, rest));
        }
        if (arity == 3 && name == "findall") {
            return findall(g, t, rest);
        }
        if (arity == 2 && name == "$collect") {
            collected_[static_cast<std::size_t>(t.arg(0).value())].push_back(bindings_.resolve(t.arg(1)));
            return kNext;
        }
        if (auto sig = builtin(t, rest)) {
            return *sig;
        }
        return call_user(g, t, rest);
    }

    Signal cut(const ContPtr &rest, std::size_t barrier) {
        Signal sig = solve(rest);
        if (sig.kind == Signal::Next) {
            return Signal{Signal::Cut, barrier};
        }
        return sig;
    }

    Signal if_then_else(const Goal &g, const Term &cond, const Term &then, const Term &otherwise,
                        const ContPtr &rest) {
        const std::size_t b = ++barrier_counter_;
        const std::size_t mark = bindings_.mark();
        Signal sig = solve(push(Goal{cond, g.ns, b, g.depth},
                                push(Goal{Term::compound("$cut", {Term::integer(static_cast<std::int64_t>(b))}),
                                          Term(), b, g.depth},
                                     push(Goal{then, g.ns, g.cut_barrier, g.depth}, rest))));
        bindings_.undo(mark);
        if (sig.kind == Signal::Cut && sig.barrier == b) {
            return kNext;
        }
        if (sig.kind != Signal::Next) {
            return sig;
        }
        return solve(push(Goal{otherwise, g.ns, g.cut_barrier, g.depth}, rest));
    }

    Signal negation(const Goal &g, const Term &inner, const ContPtr &rest) {
        const std::size_t b = ++barrier_counter_;
        const std::size_t mark = bindings_.mark();
        Signal sig = solve(push(Goal{inner, g.ns, b, g.depth},
                                push(Goal{Term::compound("$cut", {Term::integer(static_cast<std::int64_t>(b))}),
                                          Term(), b, g.depth},
                                     push(Goal{Term::atom("fail"), Term(), b, g.depth}, nullptr))));
        bindings_.undo(mark);
        if (sig.kind == Signal::Cut && sig.barrier == b) {
            return kNext;
        }
        if (sig.kind != Signal::Next) {
            return sig;
        }
        return solve(rest);
    }

    // Runs `callee` with its own cut barrier (call/N semantics).
    Signal opaque(const Goal &g, const Term &callee, const Term &ns, const ContPtr &rest) {
        const std::size_t b = ++barrier_counter_;
        Signal sig = solve(push(Goal{callee, ns, b, g.depth}, rest));
        if (sig.kind == Signal::Cut && sig.barrier == b) {
            return kNext;
        }
        return sig;
    }

    Signal findall(const Goal &g, const Term &t, const ContPtr &rest) {
        const std::size_t b = ++barrier_counter_;
        const std::size_t slot = collected_.size();
        collected_.emplace_back();
        const std::size_t mark = bindings_.mark();
        const std::size_t saved_next = next_var_;
        Signal sig = solve(push(
            Goal{t.arg(1), g.ns, b, g.depth},
            push(Goal{Term::compound("$collect", {Term::integer(static_cast<std::int64_t>(slot)), t.arg(0)}), Term(),
                      b, g.depth},
                 nullptr)));
        bindings_.undo(mark);
        next_var_ = saved_next;
        if (sig.kind == Signal::Halt) {
            return sig;
        }
        std::vector<Term> items;
        for (const Term &raw : collected_[slot]) {
            std::unordered_map<std::size_t, std::size_t> map;
            items.push_back(freshen(raw, map, next_var_));
        }
        collected_.pop_back();
        bindings_.reserve_ids(next_var_);
        return unify_then(t.arg(2), Term::list(std::move(items)), rest);
    }

    Signal unify_then(const Term &a, const Term &b, const ContPtr &rest) {
        const std::size_t mark = bindings_.mark();
        Signal sig = kNext;
        if (bindings_.unify(a, b)) {
            sig = solve(rest);
        }
        bindings_.undo(mark);
        return sig;
    }

    Signal when(bool condition, const ContPtr &rest) { return condition ? solve(rest) : kNext; }

    std::int64_t eval(const Term &expr) {
        const Term e = bindings_.deref(expr);
        if (e.is_integer()) return e.value();
        if (e.is_variable()) throw_instantiation();
        if (e.is_compound() && e.arity() == 1) {
            const std::int64_t a = eval(e.arg(0));
            if (e.name() == "-") return -a;
            if (e.name() == "+") return a;
            if (e.name() == "abs") return a < 0 ? -a : a;
        }
        if (e.is_compound() && e.arity() == 2) {
            const std::int64_t a = eval(e.arg(0));
            const std::int64_t b = eval(e.arg(1));
            const std::string &op = e.name();
            if (op == "+") return a + b;
            if (op == "-") return a - b;
            if (op == "*") return a * b;
            if (op == "min") return std::min(a, b);
            if (op == "max") return std::max(a, b);
            if (op == "/" || op == "//" || op == "mod" || op == "rem") {
                if (b == 0) {
                    throw UncaughtThrow(error_term(Term::compound("evaluation_error", {Term::atom("zero_divisor")})));
                }
                if (op == "mod") return ((a % b) + b) % b;
                if (op == "rem") return a % b;
                return a / b;
            }
        }
        throw_type("evaluable", e);
    }

    static int compare_order(const Term &a, const Term &b) {
        // Standard order: Var < Number < Atom < Compound.
        auto rank = [](const Term &t) {
            switch (t.kind()) {
                case Term::Kind::Variable: return 0;
                case Term::Kind::Integer: return 1;
                case Term::Kind::Atom: return 2;
                case Term::Kind::Compound: return 3;
            }
            return 4;
        };
        if (rank(a) != rank(b)) return rank(a) < rank(b) ? -1 : 1;
        switch (a.kind()) {
            case Term::Kind::Variable:
                return a.var_id() == b.var_id() ? 0 : (a.var_id() < b.var_id() ? -1 : 1);
            case Term::Kind::Integer:
                return a.value() == b.value() ? 0 : (a.value() < b.value() ? -1 : 1);
            case Term::Kind::Atom:
                return a.name().compare(b.name());
            case Term::Kind::Compound:
                if (a.arity() != b.arity()) return a.arity() < b.arity() ? -1 : 1;
                if (int c = a.name().compare(b.name())) return c;
                for (std::size_t i = 0; i < a.arity(); ++i) {
                    if (int c = compare_order(a.arg(i), b.arg(i))) return c;
                }
                return 0;
        }
        return 0;
    }

    std::optional<Signal> builtin(const Term &t, const ContPtr &rest) {
        const std::string &name = t.name();
        const std::size_t arity = t.arity();
        if (arity == 1) {
            const Term a = bindings_.deref(t.arg(0));
            if (name == "var") return when(a.is_variable(), rest);
            if (name == "nonvar") return when(!a.is_variable(), rest);
            if (name == "atom") return when(a.is_atom(), rest);
            if (name == "number" || name == "integer") return when(a.is_integer(), rest);
            if (name == "atomic") return when(a.is_atom() || a.is_integer(), rest);
            if (name == "compound") return when(a.is_compound(), rest);
            if (name == "callable") return when(a.is_callable(), rest);
            if (name == "is_list") {
                std::vector<Term> items;
                return when(list_items(bindings_.resolve(a), items), rest);
            }
            if (name == "throw") {
                if (a.is_variable()) throw_instantiation();
                throw UncaughtThrow(bindings_.resolve(a));
            }
            if (name == "write" || name == "print" || name == "writeln") {
                result_.output += to_string(bindings_.resolve(a));
                if (name == "writeln") result_.output += "\n";
                return solve(rest);
            }
        }
        if (arity == 2) {
            const Term &a = t.arg(0);
            const Term &b = t.arg(1);
            if (name == "=") return unify_then(a, b, rest);
            if (name == "\\=") {
                const std::size_t mark = bindings_.mark();
                const bool ok = bindings_.unify(a, b);
                bindings_.undo(mark);
                return when(!ok, rest);
            }
            if (name == "==" || name == "\\==" || name == "@<" || name == "@>" || name == "@=<" || name == "@>=") {
                const int c = compare_order(bindings_.resolve(a), bindings_.resolve(b));
                if (name == "==") return when(c == 0, rest);
                if (name == "\\==") return when(c != 0, rest);
                if (name == "@<") return when(c < 0, rest);
                if (name == "@>") return when(c > 0, rest);
                if (name == "@=<") return when(c <= 0, rest);
                return when(c >= 0, rest);
            }
            if (name == "is") return unify_then(a, Term::integer(eval(b)), rest);
            if (name == "=:=") return when(eval(a) == eval(b), rest);
            if (name == "=\\=") return when(eval(a) != eval(b), rest);
            if (name == "<") return when(eval(a) < eval(b), rest);
            if (name == ">") return when(eval(a) > eval(b), rest);
            if (name == "=<") return when(eval(a) <= eval(b), rest);
            if (name == ">=") return when(eval(a) >= eval(b), rest);
            if (name == "=..") return univ(a, b, rest);
        }
        if (arity == 3 && name == "functor") {
            const Term a = bindings_.deref(t.arg(0));
            if (!a.is_variable()) {
                return unify_then(Term::compound(",", {t.arg(1), t.arg(2)}),
                                  Term::compound(",", {a.is_compound() ? Term::atom(a.name()) : a,
                                                       Term::integer(static_cast<std::int64_t>(a.arity()))}),
                                  rest);
            }
            const Term f = bindings_.deref(t.arg(1));
            const Term n = bindings_.deref(t.arg(2));
            if (f.is_variable() || n.is_variable()) throw_instantiation();
            if (!n.is_integer()) throw_type("integer", n);
            std::vector<Term> args;
            for (std::int64_t i = 0; i < n.value(); ++i) {
                args.push_back(Term::variable(next_var_++));
            }
            bindings_.reserve_ids(next_var_);
            return unify_then(a, args.empty() ? f : Term::compound(f.name(), std::move(args)), rest);
        }
        if (arity == 3 && name == "arg") {
            const Term n = bindings_.deref(t.arg(0));
            const Term c = bindings_.deref(t.arg(1));
            if (n.is_variable() || c.is_variable()) throw_instantiation();
            if (!n.is_integer()) throw_type("integer", n);
            if (!c.is_compound()) throw_type("compound", c);
            if (n.value() < 1 || static_cast<std::size_t>(n.value()) > c.arity()) return kNext;
            return unify_then(t.arg(2), c.arg(static_cast<std::size_t>(n.value() - 1)), rest);
        }
        return std::nullopt;
    }

    Signal univ(const Term &a, const Term &b, const ContPtr &rest) {
        const Term lhs = bindings_.deref(a);
        if (!lhs.is_variable()) {
            std::vector<Term> items;
            if (lhs.is_compound()) {
                items.push_back(Term::atom(lhs.name()));
                items.insert(items.end(), lhs.args().begin(), lhs.args().end());
            } else {
                items.push_back(lhs);
            }
            return unify_then(b, Term::list(std::move(items)), rest);
        }
        std::vector<Term> items;
        if (!list_items(bindings_.resolve(b), items) || items.empty()) throw_instantiation();
        const Term head = bindings_.deref(items.front());
        if (items.size() == 1) return unify_then(lhs, head, rest);
        if (!head.is_atom()) throw_type("atom", head);
        return unify_then(lhs, Term::compound(head.name(), {items.begin() + 1, items.end()}), rest);
    }

    Signal call_user(const Goal &g, const Term &t, const ContPtr &rest) {
        const std::vector<std::size_t> &candidates = rules_.lookup(t.name(), t.arity());
        if (candidates.empty()) {
            return kNext;
        }
        if (g.depth >= options_.depth_limit) {
            result_.truncated = true;
            return kNext;
        }
        const std::size_t b = ++barrier_counter_;
        for (std::size_t index : candidates) {
            const Clause &clause = rules_.clauses()[index];
            if (!g.ns.empty() && clause.ns != g.ns.name()) {
                continue;
            }
            const std::size_t offset = next_var_;
            next_var_ += clause.var_count;
            bindings_.reserve_ids(next_var_);
            const std::size_t mark = bindings_.mark();
            Signal sig = kNext;
            if (bindings_.unify(rename(clause.head, offset), t, {offset, &clause.linear_head_vars})) {
                if (options_.clause_hits) {
                    ++(*options_.clause_hits)[index];
                }
                ContPtr body = rest;
                for (auto it = clause.body.rbegin(); it != clause.body.rend(); ++it) {
                    body = push(Goal{rename(*it, offset), Term(), b, g.depth + 1}, std::move(body));
                }
                sig = solve(body);
            }
            bindings_.undo(mark);
            next_var_ = offset;
            if (sig.kind == Signal::Cut && sig.barrier == b) {
                return kNext;
            }
            if (sig.kind != Signal::Next) {
                return sig;
            }
        }
        return kNext;
    }

    void record_solution() {
        Solution s;
        for (std::size_t id = 0; id < names_.size(); ++id) {
            if (names_[id] == "_" || (!names_[id].empty() && names_[id][0] == '_')) {
                continue;
            }
            s.bindings.emplace_back(names_[id], bindings_.resolve(Term::variable(id, names_[id])));
        }
        result_.solutions.push_back(std::move(s));
    }

    const RuleBase &rules_;
    const QueryOptions &options_;
    std::size_t next_var_;
    std::size_t barrier_counter_ = 0;
    Bindings bindings_;
    std::vector<std::vector<Term>> collected_;
    std::span<const std::string> names_;
    QueryResult result_;
};

}  // namespace

namespace {

constexpr std::size_t kSolverStackBytes = std::size_t{512} << 20;

struct SolverJob {
    const RuleBase *rules;
    const Term *goal;
    std::span<const std::string> names;
    const QueryOptions *options;
    QueryResult result;
    std::exception_ptr error;
};

void *solver_entry(void *arg) {
    auto *job = static_cast<SolverJob *>(arg);
    try {
        Engine engine(*job->rules, *job->options, job->names.size());
        job->result = engine.run(*job->goal, job->names);
    } catch (...) {
        job->error = std::current_exception();
    }
    return nullptr;
}

}  // namespace

QueryResult query(const RuleBase &rules, const Term &goal, std::span<const std::string> variable_names,
                  const QueryOptions &options) {
    if (options.depth_limit == 0) {
        throw ArgumentError("depth limit must be at least 1");
    }
    // Resolution recurses once per goal; run it on a thread with a stack
    // sized for the depth limit.
    SolverJob job{&rules, &goal, variable_names, &options, {}, nullptr};
    pthread_attr_t attr;
    pthread_attr_init(&attr);
    pthread_attr_setstacksize(&attr, kSolverStackBytes);
    pthread_t thread;
    const int rc = pthread_create(&thread, &attr, solver_entry, &job);
    pthread_attr_destroy(&attr);
    if (rc != 0) {
        solver_entry(&job);
    } else {
        pthread_join(thread, nullptr);
    }
    if (job.error) {
        std::rethrow_exception(job.error);
    }
    return std::move(job.result);
}

QueryResult query(const RuleBase &rules, std::string_view goal_text, const QueryOptions &options) {
    ReadTerm read = read_term(goal_text);
    return query(rules, read.term, read.variable_names, options);
}

bool is_builtin(std::string_view name, std::size_t arity) {
    static const std::set<std::pair<std::string_view, std::size_t>> table = {
        {"true", 0},   {"fail", 0},    {"false", 0},  {"!", 0},        {"nl", 0},       {",", 2},
        {";", 2},      {"->", 2},      {"\\+", 1},   {"not", 1},      {"~", 1},        {":", 2},
        {"findall", 3}, {"var", 1},     {"nonvar", 1}, {"atom", 1},     {"number", 1},   {"integer", 1},
        {"atomic", 1}, {"compound", 1}, {"callable", 1}, {"is_list", 1}, {"throw", 1},   {"write", 1},
        {"print", 1},  {"writeln", 1},  {"=", 2},      {"\\=", 2},     {"==", 2},       {"\\==", 2},
        {"@<", 2},     {"@>", 2},      {"@=<", 2},    {"@>=", 2},      {"is", 2},       {"=:=", 2},
        {"=\\=", 2},  {"<", 2},       {">", 2},      {"=<", 2},       {">=", 2},       {"=..", 2},
        {"functor", 3}, {"arg", 3},
    };
    if (name == "call" && arity >= 1) {
        return true;
    }
    return table.count({name, arity}) > 0;
}

std::optional<std::map<std::size_t, Term>> unify(const Term &a, const Term &b) {
    Bindings bindings;
    if (!bindings.unify(a, b)) {
        return std::nullopt;
    }
    std::map<std::size_t, Term> out;
    std::function<void(const Term &)> collect = [&](const Term &t) {
        if (t.is_variable()) {
            Term value = bindings.resolve(t);
            if (!(value.is_variable() && value.var_id() == t.var_id())) {
                out.emplace(t.var_id(), value);
            }
        } else if (t.is_compound()) {
            for (const Term &x : t.args()) {
                collect(x);
            }
        }
    };
    collect(a);
    collect(b);
    return out;
}

}  // namespace qrw::inference
