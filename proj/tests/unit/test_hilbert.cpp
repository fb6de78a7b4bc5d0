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

#include <gtest/gtest.h>

#include "qrw/error.hpp"
#include "qrw/inference/hilbert.hpp"

namespace qrw::inference {
namespace {

using proof::Axiom;
using proof::ModusPonens;
using proof::Premise;

ProofLine line(const char *text, proof::Justification j) { return ProofLine{parse_formula(text), j}; }

TEST(Formula, ParseAndPrint) {
    EXPECT_EQ(to_string(parse_formula("p -> q -> p")), "(p -> (q -> p))");
    EXPECT_EQ(to_string(parse_formula("~q -> ~p")), "(~q -> ~p)");
    EXPECT_EQ(parse_formula("¬p → q"), parse_formula("~p -> q"));
    EXPECT_THROW(parse_formula("p -> "), ParseError);
    EXPECT_THROW(parse_formula("(p"), ParseError);
}

TEST(Axioms, SchemeRecognition) {
    EXPECT_EQ(is_axiom_instance(parse_formula("p -> (q -> p)")), 1);
    EXPECT_EQ(is_axiom_instance(parse_formula("(p -> (q -> r)) -> ((p -> q) -> (p -> r))")), 2);
    EXPECT_EQ(is_axiom_instance(parse_formula("(~q -> ~p) -> (p -> q)")), 3);
    EXPECT_EQ(is_axiom_instance(parse_formula("p -> p")), std::nullopt);
    EXPECT_EQ(is_axiom_instance(parse_formula("(a -> b) -> (~c -> (a -> b))")), 1);
    EXPECT_EQ(is_axiom_instance(parse_formula("p -> (q -> q)")), std::nullopt);
}

TEST(Proof, ModusPonens) {
    const auto r = check_proof({line("p", Premise{}), line("p -> q", Premise{}), line("q", ModusPonens{1, 2})});
    EXPECT_TRUE(r.accepted) << r.reason;
}

TEST(Proof, DanglingCitationIsStructural) {
    try {
        check_proof({line("q", ModusPonens{1, 2})});
        FAIL() << "expected StructuralError";
    } catch (const StructuralError &e) {
        EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos);
    }
}

std::vector<ProofLine> identity_proof() {
    return {
        line("(A -> ((A -> A) -> A)) -> ((A -> (A -> A)) -> (A -> A))", Axiom{}),
        line("A -> ((A -> A) -> A)", Axiom{}),
        line("(A -> (A -> A)) -> (A -> A)", ModusPonens{2, 1}),
        line("A -> (A -> A)", Axiom{}),
        line("A -> A", ModusPonens{4, 3}),
    };
}

TEST(Proof, FiveLineIdentityDerivation) {
    const auto r = check_proof(identity_proof());
    EXPECT_TRUE(r.accepted) << r.reason;
}

TEST(Proof, CorruptedCitationRejectedWithLineNumber) {
    auto lines = identity_proof();
    lines[4].justification = ModusPonens{2, 3};
    const auto r = check_proof(lines);
    EXPECT_FALSE(r.accepted);
    EXPECT_EQ(r.line, 5u);
    EXPECT_FALSE(r.reason.empty());

    auto forward = identity_proof();
    forward[2].justification = ModusPonens{4, 1};
    EXPECT_THROW(check_proof(forward), StructuralError);
}

TEST(Proof, NonAxiomClaimedAsAxiom) {
    const auto r = check_proof({line("p", Premise{}), line("p -> p", Axiom{})});
    EXPECT_FALSE(r.accepted);
    EXPECT_EQ(r.line, 2u);
}

}  // namespace
}  // namespace qrw::inference
