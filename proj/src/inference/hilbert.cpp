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

#include "qrw/inference/hilbert.hpp"

#include <cctype>
#include <map>

#include "qrw/error.hpp"

namespace qrw::inference {

Formula Formula::proposition(std::string name) {
    return Formula(std::make_shared<const Node>(Node{Kind::Proposition, std::move(name), {}}));
}

Formula Formula::negation(Formula operand) {
    return Formula(std::make_shared<const Node>(Node{Kind::Negation, {}, {std::move(operand)}}));
}

Formula Formula::implication(Formula antecedent, Formula consequent) {
    return Formula(
        std::make_shared<const Node>(Node{Kind::Implication, {}, {std::move(antecedent), std::move(consequent)}}));
}

bool operator==(const Formula &a, const Formula &b) {
    if (a.node_ == b.node_) {
        return true;
    }
    if (a.kind() != b.kind()) {
        return false;
    }
    switch (a.kind()) {
        case Formula::Kind::Proposition:
            return a.name() == b.name();
        case Formula::Kind::Negation:
            return a.operand() == b.operand();
        case Formula::Kind::Implication:
            return a.antecedent() == b.antecedent() && a.consequent() == b.consequent();
    }
    return false;
}

namespace {

class FormulaParser {
   public:
    explicit FormulaParser(std::string_view text) : text_(text) {}

    Formula parse() {
        Formula f = implication();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected input");
        }
        return f;
    }

   private:
    Formula implication() {
        Formula lhs = unary();
        skip_space();
        if (accept("->") || accept("→")) {
            return Formula::implication(lhs, implication());
        }
        return lhs;
    }

    Formula unary() {
        skip_space();
        if (accept("~") || accept("!") || accept("¬")) {
            return Formula::negation(unary());
        }
        if (accept("(")) {
            Formula inner = implication();
            skip_space();
            if (!accept(")")) {
                fail("expected ')'");
            }
            return inner;
        }
        const std::size_t begin = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        if (begin == pos_) {
            fail("expected a proposition");
        }
        return Formula::proposition(std::string(text_.substr(begin, pos_ - begin)));
    }

    bool accept(std::string_view token) {
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(const std::string &what) const { throw ParseError(what, 1, pos_ + 1); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

using Bindings = std::map<std::string, Formula>;

// Scheme metavariables are propositions; everything else must match
// structurally.
bool match(const Formula &scheme, const Formula &f, Bindings &bound) {
    switch (scheme.kind()) {
        case Formula::Kind::Proposition: {
            auto [it, inserted] = bound.emplace(scheme.name(), f);
            return inserted || it->second == f;
        }
        case Formula::Kind::Negation:
            return f.kind() == Formula::Kind::Negation && match(scheme.operand(), f.operand(), bound);
        case Formula::Kind::Implication:
            return f.kind() == Formula::Kind::Implication && match(scheme.antecedent(), f.antecedent(), bound) &&
                   match(scheme.consequent(), f.consequent(), bound);
    }
    return false;
}

const std::vector<Formula> &schemes() {
    static const std::vector<Formula> table = {
        parse_formula("A -> (B -> A)"),
        parse_formula("(A -> (B -> C)) -> ((A -> B) -> (A -> C))"),
        parse_formula("(~B -> ~A) -> (A -> B)"),
    };
    return table;
}

}  // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

std::string to_string(const Formula &f) {
    switch (f.kind()) {
        case Formula::Kind::Proposition:
            return f.name();
        case Formula::Kind::Negation:
            return "~" + to_string(f.operand());
        case Formula::Kind::Implication:
            return "(" + to_string(f.antecedent()) + " -> " + to_string(f.consequent()) + ")";
    }
    return {};
}

std::optional<int> is_axiom_instance(const Formula &f) {
    const auto &table = schemes();
    for (std::size_t i = 0; i < table.size(); ++i) {
        Bindings bound;
        if (match(table[i], f, bound)) {
            return static_cast<int>(i + 1);
        }
    }
    return std::nullopt;
}

ProofCheck check_proof(const std::vector<ProofLine> &lines) {
    for (std::size_t n = 1; n <= lines.size(); ++n) {
        const ProofLine &line = lines[n - 1];
        std::string problem;
        if (std::holds_alternative<proof::Axiom>(line.justification)) {
            if (!is_axiom_instance(line.formula)) {
                problem = "not an instance of axiom schemes 1-3";
            }
        } else if (const auto *mp = std::get_if<proof::ModusPonens>(&line.justification)) {
            for (std::size_t cited : {mp->antecedent, mp->implication}) {
                if (cited < 1 || cited >= n) {
                    throw StructuralError("line " + std::to_string(n) + ": modus ponens cites line " +
                                          std::to_string(cited) + ", which is not an earlier line");
                }
            }
            const Formula &a = lines[mp->antecedent - 1].formula;
            const Formula &imp = lines[mp->implication - 1].formula;
            if (imp.kind() != Formula::Kind::Implication) {
                problem = "cited line " + std::to_string(mp->implication) + " is not an implication";
            } else if (!(imp.antecedent() == a)) {
                problem = "antecedent of line " + std::to_string(mp->implication) + " differs from line " +
                          std::to_string(mp->antecedent);
            } else if (!(imp.consequent() == line.formula)) {
                problem = "formula is not the consequent of line " + std::to_string(mp->implication);
            }
        }
        if (!problem.empty()) {
            return ProofCheck{false, n, "line " + std::to_string(n) + ": " + problem};
        }
    }
    return {};
}

}  // namespace qrw::inference
