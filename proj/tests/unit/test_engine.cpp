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

#include <random>

#include "qrw/inference/engine.hpp"
#include "qrw/inference/reader.hpp"
#include "qrw/inference/rule_base.hpp"

namespace qrw::inference {
namespace {

std::vector<std::string> column(const QueryResult &r, std::string_view var) {
    std::vector<std::string> out;
    for (const auto &s : r.solutions) {
        out.push_back(to_string(*s.get(var)));
    }
    return out;
}

TEST(Reader, SingleFactClause) {
    const RuleBase rb = load_rules("fact:device(udp).");
    ASSERT_EQ(rb.size(), 1u);
    EXPECT_EQ(rb.clauses()[0].head.indicator(), "device/1");
    EXPECT_EQ(rb.clauses()[0].ns, "fact");
    EXPECT_TRUE(rb.clauses()[0].body.empty());
}

TEST(Reader, EmptySourceIsEmptyRuleBase) { EXPECT_EQ(load_rules("").size(), 0u); }

TEST(Reader, MalformedClauseReportsPosition) {
    try {
        load_rules("a(b).\nfoo(bar(.\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_GT(e.column(), 0u);
    }
}

TEST(Reader, OperatorsAndLists) {
    const ReadTerm t = read_term("X = [a, b | T], Y is 1 + 2 * 3");
    EXPECT_EQ(t.term.indicator(), ",/2");
    EXPECT_EQ(t.variable_names.size(), 3u);
    EXPECT_EQ(to_string(read_term("a:-b,c;d").term), to_string(read_term("(a :- ((b , c) ; d))").term));
}

TEST(Engine, ArithmeticAndComparison) {
    const RuleBase rb;
    EXPECT_EQ(column(query(rb, "X is 7 // 2 + 3 * 4 - 10 mod 4"), "X"), std::vector<std::string>{"13"});
    EXPECT_EQ(query(rb, "3 < 4, 4 >= 4, 2 =\\= 3").solutions.size(), 1u);
    EXPECT_TRUE(query(rb, "3 > 4").solutions.empty());
    EXPECT_THROW(query(rb, "X is 1 / 0"), UncaughtThrow);
}

TEST(Engine, BacktrackingClauseOrderAndCut) {
    const RuleBase rb = load_rules(
        "p(1). p(2). p(3).\n"
        "first(X) :- p(X), !.\n"
        "maxp(X) :- p(X), \\+ (p(Y), Y > X).\n"
        "classify(X, small) :- X < 2, !.\n"
        "classify(_, big).\n");
    EXPECT_EQ(column(query(rb, "p(X)"), "X"), (std::vector<std::string>{"1", "2", "3"}));
    EXPECT_EQ(column(query(rb, "first(X)"), "X"), std::vector<std::string>{"1"});
    EXPECT_EQ(column(query(rb, "maxp(X)"), "X"), std::vector<std::string>{"3"});
    EXPECT_EQ(column(query(rb, "classify(1, C)"), "C"), std::vector<std::string>{"small"});
    EXPECT_EQ(column(query(rb, "classify(5, C)"), "C"), std::vector<std::string>{"big"});
    EXPECT_EQ(column(query(rb, "( p(X), X > 1 -> Y = yes ; Y = no )"), "Y"), std::vector<std::string>{"yes"});
    EXPECT_EQ(column(query(rb, "findall(X, p(X), L)"), "L"), std::vector<std::string>{"[1,2,3]"});
}

TEST(Engine, OccursCheckRejectsCyclicBindings) {
    const RuleBase rb = load_rules("q(X, X).");
    EXPECT_TRUE(query(rb, "q(Y, f(Y))").solutions.empty());
    EXPECT_TRUE(query(rb, "X = f(X)").solutions.empty());
    EXPECT_EQ(query(rb, "q(a, A)").solutions.size(), 1u);
}

TEST(Engine, UnknownPredicateFailsAndNamespaces) {
    const RuleBase rb = load_rules("fact:colour(red). paint:colour(blue).");
    EXPECT_TRUE(query(rb, "nosuch(1)").solutions.empty());
    EXPECT_EQ(column(query(rb, "colour(X)"), "X"), (std::vector<std::string>{"red", "blue"}));
    EXPECT_EQ(column(query(rb, "paint:colour(X)"), "X"), std::vector<std::string>{"blue"});
}

TEST(Engine, DepthLimitTruncatesInsteadOfLooping) {
    const RuleBase rb = load_rules("nat(z). nat(s(X)) :- nat(X).\nloop :- loop.");
    QueryOptions o;
    o.depth_limit = 10;
    const QueryResult r = query(rb, "nat(X)", o);
    EXPECT_TRUE(r.truncated);
    EXPECT_FALSE(r.complete());
    EXPECT_EQ(r.solutions.size(), 10u);
    const QueryResult l = query(rb, "loop", o);
    EXPECT_TRUE(l.truncated);
    EXPECT_TRUE(l.solutions.empty());
    o.depth_limit = 0;
    EXPECT_THROW(query(rb, "nat(X)", o), ArgumentError);
}

TEST(Engine, LargerDepthLimitGivesSupersetOfSolutions) {
    const RuleBase rb = load_rules(
        "edge(a,b). edge(b,c). edge(c,a). edge(c,d).\n"
        "path(X,Y) :- edge(X,Y).\npath(X,Y) :- edge(X,Z), path(Z,Y).\n");
    std::vector<std::string> previous;
    for (std::size_t limit = 1; limit <= 12; ++limit) {
        QueryOptions o;
        o.depth_limit = limit;
        o.max_solutions = 10'000;
        std::vector<std::string> now = column(query(rb, "path(a, Y)", o), "Y");
        ASSERT_GE(now.size(), previous.size());
        EXPECT_TRUE(std::equal(previous.begin(), previous.end(), now.begin())) << "limit " << limit;
        previous = std::move(now);
    }
}

TEST(Engine, MaxSolutionsStopsEarly) {
    const RuleBase rb = load_rules("n(1). n(2). n(3).");
    QueryOptions o;
    o.max_solutions = 2;
    EXPECT_EQ(query(rb, "n(X)", o).solutions.size(), 2u);
}

TEST(Engine, WriteCollectsOutput) {
    EXPECT_EQ(query(RuleBase{}, "write(hello), nl, write(f(x))").output, "hello\nf(x)");
}

TEST(Engine, ClauseHitsCountHeadUnifications) {
    const RuleBase rb = load_rules("a(1). a(2). b(x).");
    std::vector<std::size_t> hits;
    QueryOptions o;
    o.clause_hits = &hits;
    query(rb, "a(2)", o);
    ASSERT_EQ(hits.size(), 3u);
    EXPECT_EQ(hits, (std::vector<std::size_t>{0, 1, 0}));
}

Term random_term(std::mt19937_64 &rng, int depth) {
    const int pick = static_cast<int>(rng() % (depth > 0 ? 5 : 3));
    switch (pick) {
        case 0: return Term::atom(rng() % 2 ? "a" : "b");
        case 1: return Term::variable(rng() % 4, "V");
        case 2: return Term::integer(static_cast<std::int64_t>(rng() % 3));
        default: {
            std::vector<Term> args;
            const std::size_t n = 1 + rng() % 2;
            for (std::size_t i = 0; i < n; ++i) {
                args.push_back(random_term(rng, depth - 1));
            }
            return Term::compound(rng() % 2 ? "f" : "g", std::move(args));
        }
    }
}

Term substitute(const Term &t, const std::map<std::size_t, Term> &s) {
    if (t.is_variable()) {
        auto it = s.find(t.var_id());
        return it == s.end() ? t : substitute(it->second, s);
    }
    if (!t.is_compound()) {
        return t;
    }
    std::vector<Term> args;
    for (const Term &a : t.args()) {
        args.push_back(substitute(a, s));
    }
    return Term::compound(t.name(), std::move(args));
}

TEST(Unify, SymmetricAndProducesUnifiers) {
    std::mt19937_64 rng(2024);
    int successes = 0;
    for (int i = 0; i < 5000; ++i) {
        const Term a = random_term(rng, 3), b = random_term(rng, 3);
        const auto ab = unify(a, b);
        const auto ba = unify(b, a);
        ASSERT_EQ(ab.has_value(), ba.has_value()) << to_string(a) << " vs " << to_string(b);
        if (ab) {
            ++successes;
            EXPECT_EQ(substitute(a, *ab), substitute(b, *ab));
            EXPECT_EQ(substitute(a, *ba), substitute(b, *ba));
        }
    }
    EXPECT_GT(successes, 100);
}

}  // namespace
}  // namespace qrw::inference
