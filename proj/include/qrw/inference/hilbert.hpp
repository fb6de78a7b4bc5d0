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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qrw::inference {

/// Propositional formula over negation and implication.
class Formula {
   public:
    enum class Kind { Proposition, Negation, Implication };

    static Formula proposition(std::string name);
    static Formula negation(Formula operand);
    static Formula implication(Formula antecedent, Formula consequent);

    Kind kind() const noexcept { return node_->kind; }
    const std::string &name() const noexcept { return node_->name; }
    const Formula &operand() const { return node_->children.at(0); }
    const Formula &antecedent() const { return node_->children.at(0); }
    const Formula &consequent() const { return node_->children.at(1); }

    friend bool operator==(const Formula &a, const Formula &b);

   private:
    struct Node {
        Kind kind;
        std::string name;
        std::vector<Formula> children;
    };
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Reads `p`, `~A` (or `¬A`, `!A`), `A -> B` (or `A → B`), and parentheses.
/// Implication associates to the right. Throws ParseError.
Formula parse_formula(std::string_view text);

/// Fully parenthesised ASCII rendering, e.g. "(p -> (q -> p))".
std::string to_string(const Formula &f);

/// 1, 2 or 3 when `f` is an instance of
///   1: A -> (B -> A)
///   2: (A -> (B -> C)) -> ((A -> B) -> (A -> C))
///   3: (~B -> ~A) -> (A -> B)
/// (lowest number wins), otherwise nullopt.
std::optional<int> is_axiom_instance(const Formula &f);

namespace proof {
struct Premise {};
struct Axiom {};
/// Modus ponens from line `antecedent` (A) and line `implication` (A -> B),
/// both 1-based.
struct ModusPonens {
    std::size_t antecedent;
    std::size_t implication;
};
using Justification = std::variant<Premise, Axiom, ModusPonens>;
}  // namespace proof

struct ProofLine {
    Formula formula;
    proof::Justification justification;
};

struct ProofCheck {
    bool accepted = true;
    /// 1-based line of the first invalid step; 0 when accepted.
    std::size_t line = 0;
    std::string reason;
};

/// Checks every line. An invalid step (axiom claim that matches no scheme,
/// modus ponens whose cited lines do not fit) is reported in the result.
/// A citation of a line that is not strictly earlier throws StructuralError
/// naming the citing line.
ProofCheck check_proof(const std::vector<ProofLine> &lines);

}  // namespace qrw::inference
