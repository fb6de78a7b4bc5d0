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

#include "qrw/inference/term.hpp"

#include <cctype>
#include <sstream>

#include "qrw/inference/operators.hpp"

namespace qrw::inference {

Term Term::atom(std::string name) {
    return Term(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), 0, 0, {}}));
}

Term Term::variable(std::size_t id, std::string name) {
    return Term(std::make_shared<const Node>(Node{Kind::Variable, std::move(name), 0, id, {}}));
}

Term Term::integer(std::int64_t value) {
    return Term(std::make_shared<const Node>(Node{Kind::Integer, {}, value, 0, {}}));
}

Term Term::compound(std::string functor, std::vector<Term> args) {
    if (args.empty()) {
        return atom(std::move(functor));
    }
    return Term(std::make_shared<const Node>(Node{Kind::Compound, std::move(functor), 0, 0, std::move(args)}));
}

Term Term::list(std::vector<Term> items, Term tail) {
    Term out = std::move(tail);
    for (auto it = items.rbegin(); it != items.rend(); ++it) {
        out = compound(".", {*it, out});
    }
    return out;
}

std::string Term::indicator() const {
    if (is_atom()) {
        return name() + "/0";
    }
    if (is_compound()) {
        return name() + "/" + std::to_string(arity());
    }
    return "?/0";
}

bool operator==(const Term &a, const Term &b) {
    if (a.node_ == b.node_) {
        return true;
    }
    if (!a.node_ || !b.node_ || a.kind() != b.kind()) {
        return false;
    }
    switch (a.kind()) {
        case Term::Kind::Atom:
            return a.name() == b.name();
        case Term::Kind::Variable:
            return a.var_id() == b.var_id();
        case Term::Kind::Integer:
            return a.value() == b.value();
        case Term::Kind::Compound:
            return a.name() == b.name() && a.args() == b.args();
    }
    return false;
}

bool list_items(const Term &list, std::vector<Term> &out) {
    Term cursor = list;
    while (cursor.is_compound(".", 2)) {
        out.push_back(cursor.arg(0));
        cursor = cursor.arg(1);
    }
    return cursor.is_atom("[]");
}

namespace {

bool is_symbol_char(char c) { return std::string_view("#$&*+-./:<=>?@^~\\").find(c) != std::string_view::npos; }

bool needs_quotes(const std::string &name) {
    if (name.empty()) {
        return true;
    }
    if (name == "[]" || name == "!" || name == ";" || name == "{}" || name == "|") {
        return false;
    }
    if (std::islower(static_cast<unsigned char>(name[0]))) {
        for (char c : name) {
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
                return true;
            }
        }
        return false;
    }
    for (char c : name) {
        if (!is_symbol_char(c)) {
            return true;
        }
    }
    return false;
}

std::string atom_text(const std::string &name) {
    if (!needs_quotes(name)) {
        return name;
    }
    std::string out = "'";
    for (char c : name) {
        if (c == '\'' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    out += "'";
    return out;
}

bool alphabetic(const std::string &op) { return !op.empty() && std::isalpha(static_cast<unsigned char>(op[0])); }

class Printer {
   public:
    explicit Printer(const OperatorTable &ops) : ops_(ops) {}

    std::string print(const Term &t, int max_priority) {
        switch (t.kind()) {
            case Term::Kind::Variable:
                return t.name().empty() ? "_G" + std::to_string(t.var_id()) : t.name();
            case Term::Kind::Integer:
                return std::to_string(t.value());
            case Term::Kind::Atom: {
                const std::string text = atom_text(t.name());
                if (ops_.is_operator(t.name()) && max_priority < 1200 && t.name() != "[]") {
                    const auto inf = ops_.infix(t.name());
                    const auto pre = ops_.prefix(t.name());
                    const int p = std::max(inf ? inf->priority : 0, pre ? pre->priority : 0);
                    if (p > max_priority) {
                        return "(" + text + ")";
                    }
                }
                return text;
            }
            case Term::Kind::Compound:
                return compound(t, max_priority);
        }
        return {};
    }

   private:
    std::string compound(const Term &t, int max_priority) {
        if (t.is_compound(".", 2)) {
            return list(t);
        }
        if (t.is_compound("{}", 1)) {
            return "{" + print(t.arg(0), 1200) + "}";
        }
        if (t.arity() == 2) {
            if (auto op = ops_.infix(t.name())) {
                const int left_max = op->type == OpType::yfx ? op->priority : op->priority - 1;
                const int right_max = op->type == OpType::xfy ? op->priority : op->priority - 1;
                std::string left = print(t.arg(0), left_max);
                std::string right = print(t.arg(1), right_max);
                std::string sep;
                if (t.name() == ",") {
                    sep = ", ";
                } else if (alphabetic(t.name()) || t.name() == ":-" || t.name() == "-->" || t.name() == "->" ||
                           t.name() == ";") {
                    sep = " " + t.name() + " ";
                } else {
                    sep = t.name();
                    if (!right.empty() && is_symbol_char(right[0])) {
                        sep += " ";
                    }
                    if (!left.empty() && is_symbol_char(left.back())) {
                        sep = " " + sep;
                    }
                }
                return wrap(left + sep + right, op->priority > max_priority);
            }
        }
        if (t.arity() == 1) {
            if (auto op = ops_.prefix(t.name()); op && t.name() != "-" && t.name() != "+") {
                const int arg_max = op->type == OpType::fy ? op->priority : op->priority - 1;
                std::string inner = print(t.arg(0), arg_max);
                const bool space = alphabetic(t.name()) || (!inner.empty() && is_symbol_char(inner[0]));
                return wrap(atom_text(t.name()) + (space ? " " : "") + inner, op->priority > max_priority);
            }
            if ((t.name() == "-" || t.name() == "+") && !t.arg(0).is_integer()) {
                const auto op = ops_.prefix(t.name());
                std::string inner = print(t.arg(0), op->priority);
                const bool space = !inner.empty() && is_symbol_char(inner[0]);
                return wrap(t.name() + (space ? " " : "") + inner, op->priority > max_priority);
            }
            if (auto op = ops_.postfix(t.name())) {
                const int arg_max = op->type == OpType::yf ? op->priority : op->priority - 1;
                return wrap(print(t.arg(0), arg_max) + atom_text(t.name()), op->priority > max_priority);
            }
        }
        std::string out = atom_text(t.name()) + "(";
        for (std::size_t i = 0; i < t.arity(); ++i) {
            if (i) {
                out += ",";
            }
            out += print(t.arg(i), 999);
        }
        return out + ")";
    }

    std::string list(const Term &t) {
        std::string out = "[";
        Term cursor = t;
        bool first = true;
        while (cursor.is_compound(".", 2)) {
            if (!first) {
                out += ",";
            }
            first = false;
            out += print(cursor.arg(0), 999);
            cursor = cursor.arg(1);
        }
        if (!cursor.is_atom("[]")) {
            out += "|" + print(cursor, 999);
        }
        return out + "]";
    }

    static std::string wrap(std::string s, bool parens) { return parens ? "(" + s + ")" : s; }

    const OperatorTable &ops_;
};

}  // namespace

std::string to_string(const Term &term) {
    static const OperatorTable table = OperatorTable::standard();
    if (term.empty()) {
        return "<unbound>";
    }
    return Printer(table).print(term, 1200);
}

}  // namespace qrw::inference
