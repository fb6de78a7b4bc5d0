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

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "qrw/inference/engine.hpp"
#include "qrw/inference/expert.hpp"
#include "qrw/inference/reader.hpp"
#include "qrw/inference/rule_base.hpp"

namespace qrw::inference {
namespace {

const RuleBase &fixture() {
    static const RuleBase rb = load_rules_file(default_rules_path());
    return rb;
}

std::vector<std::string> column(const QueryResult &r, std::string_view var) {
    std::vector<std::string> out;
    for (const auto &s : r.solutions) {
        out.push_back(to_string(*s.get(var)));
    }
    return out;
}

// Independent count: every line that is not blank, not a % comment and not
// a :- directive holds exactly one clause.
std::size_t hand_count(const std::filesystem::path &path) {
    std::ifstream f(path);
    std::string line;
    std::size_t n = 0;
    while (std::getline(f, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '%' || line.compare(first, 2, ":-") == 0) {
            continue;
        }
        ++n;
    }
    return n;
}

TEST(Fixture, ClauseCountMatchesLineCount) {
    EXPECT_EQ(fixture().size(), hand_count(default_rules_path()));
    EXPECT_EQ(fixture().size(), 108u);
}

TEST(Fixture, DeviceFactsInClauseOrder) {
    EXPECT_EQ(column(query(fixture(), "device(X)"), "X"),
              (std::vector<std::string>{"input", "udp", "syn", "ipa", "port"}));
    EXPECT_TRUE(query(fixture(), "device(nosuch)").solutions.empty());
}

TEST(Fixture, ConnectedFacts) {
    EXPECT_EQ(column(query(fixture(), "connected(port(2), Y)"), "Y"), std::vector<std::string>{"computer2"});
    EXPECT_EQ(query(fixture(), "fact:connected(X, Y)").solutions.size(), 4u);
}

TEST(Fixture, ParseDeviceTriples) {
    const QueryResult r = query(fixture(), "parse:device(X, Y, Z)");
    ASSERT_EQ(r.solutions.size(), 2u);
    EXPECT_EQ(to_string(*r.solutions[1].get("Y")), "classification");
}

TEST(Classify, FreshVariablesMirrorDebuggerShape) {
    const auto start = std::chrono::steady_clock::now();
    const Classification c = classify(fixture());
    EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 1.0);
    EXPECT_FALSE(c.unknown);
    EXPECT_EQ(to_string(c.term), "classification(syn|syn,udp|udp,ipa|ipa)");
    ASSERT_EQ(c.alternatives.size(), 2u);
    EXPECT_EQ(to_string(c.alternatives[1]), "classification(syn|defines,udp|classification,ipa|port)");
    EXPECT_TRUE(c.truncated);
}

TEST(Classify, BoundAtomsFromFacts) {
    const Classification c = classify(fixture(), Term::atom("defines"), Term::atom("classification"),
                                      Term::atom("port"));
    EXPECT_FALSE(c.unknown);
    EXPECT_EQ(to_string(c.term), "classification(syn|defines,udp|classification,ipa|port)");
}

TEST(Classify, WithoutParseNamespaceIsUnknown) {
    const RuleBase rb = load_rules("fact:device(input).");
    const Classification c = classify(rb);
    EXPECT_TRUE(c.unknown);
    EXPECT_EQ(to_string(c.term), "classification(unknown)");
}

TEST(GatherArgs, ListingSemantics) {
    EXPECT_TRUE(gather_args(fixture(), {}).empty());
    const std::vector<Term> plain{Term::atom("a"), Term::atom("b")};
    EXPECT_EQ(gather_args(fixture(), plain), plain);
    const Term plus_p = Term::compound("+", {Term::atom("p")});
    const auto out = gather_args(fixture(), {plus_p}, {{Term::atom("p"), Term::atom("q")}});
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0], Term::atom("q"));
    try {
        gather_args(fixture(), {Term::atom("a"), Term::compound("+", {Term::atom("zz")})});
        FAIL() << "expected ResolutionError";
    } catch (const ResolutionError &e) {
        EXPECT_NE(std::string(e.what()).find("+zz"), std::string::npos) << e.what();
    }
}

TEST(KnownBehaviour, PortAndIpaAreConflated) {
    // The listing binds port(P) and ipa(I) to the same variable; kept as-is.
    const QueryResult r = query(fixture(), "'$dde_request'(syn, port(P), ipa(I), A)", QueryOptions{64, 1, nullptr});
    ASSERT_EQ(r.solutions.size(), 1u);
    EXPECT_EQ(to_string(*r.solutions[0].get("A")), "udp");
    EXPECT_TRUE(query(fixture(), "'$dde_request'(syn, port(P), ipa(I), _), P == I", QueryOptions{64, 1, nullptr})
                    .solutions.size() == 1);
}

TEST(KnownBehaviour, ListingThrowsExistenceError) {
    try {
        query(fixture(), "'$dde_request'(h, topic, item, A)", QueryOptions{64, 5, nullptr});
        FAIL() << "expected the listing's throw";
    } catch (const UncaughtThrow &e) {
        EXPECT_EQ(e.ball().arg(0).indicator(), "existence_error/2");
    }
}

// Every clause is either reached by one of these queries or documented as
// dead in dead_clauses().
TEST(Fixture, EveryClauseExercisedOrDocumentedDead) {
    const char *goals[] = {
        "fact:device(X)", "fact:connected(X,Y)", "parse:connected(syn,udp,ipa)", "parse:device(X,Y,Z)",
        "parse:output(classification(syn|X,udp|Y,ipa|Z))", "unknown(output)", "classification(X)",
        "classification(syn,udp,ipa)", "input(X,Y,Z)", "input(X)", "output(X,Y,Z)", "matrix(X,Y,Z)", "matrix(X)",
        "matrix(X,Y)", "node(X)", "edge(X,Y)", "edge(X)", "distance(X)", "'$dde_disconnect'(X)", "port(X)",
        "port(retractall(a))", "port(retractall(parse:parse(a)))", "port(classification(on_signal(a|b,a|c,c)))",
        "port(a|b)", "port((a;b))", "port((a,b))", "gather_args([],X)", "gather_args([a,+b],X)",
        "gather_args(port(a),X)", "gather_args(file(r,t),X)", "rl_write_history(port)", "'$dde_request'(A,B,C,D)",
        "'$dde_request'(a|b,a,c,D)", "'$dde_execute'(A,B,C)", "'$dde_execute'(a|b,X,Y)",
        "'$dde_execute'(retractall(syn),X,Y)", "dde_current_connection(A,B,C)", "dde_service(A,B,C,D,E,F)",
        "f(A,B,C)", "f(A,B,C,D)", "h(A,B)", "s(A,B,C)", "t(A,B,C)", "l(A,B,C)", "bagof(X)", "goal(a)",
        "bestf(a,S)", "bestf([l(a,1/0)],F)", "bestf([],F)", "expand(P,l(a,0/0),9999,T,S,Sol)",
        "expand(P,t(a,1/0,[]),9,T,S,Sol)", "expand(P,l(a,b,c),x,yes,S)", "expand(P,t(a,1/0,[l(b,0/0)]),9,T,S,Sol)",
        "continue(P,t(a,1/0,[l(b,1/0)]),9,T,yes,S,Sol)", "continue(A,B,C,D,E,F,G)", "succlist(0,[],X)",
        "succlist(0,[ipa/1],X)", "insert(l(a,1/0),[],X)", "insert(l(a,1/0),[l(b,0/0)],X)",
        "prolog:error_message(dde_error(a,b),L,R)", "~(fail)",
    };
    std::vector<std::size_t> total(fixture().size(), 0);
    for (const char *goal : goals) {
        std::vector<std::size_t> hits;
        QueryOptions o;
        o.depth_limit = 64;
        o.max_solutions = 50;
        o.clause_hits = &hits;
        try {
            query(fixture(), goal, o);
        } catch (const UncaughtThrow &) {
            // The listing's own throw/1 clauses; hits up to the throw still count.
        }
        ASSERT_EQ(hits.size(), total.size());
        for (std::size_t i = 0; i < hits.size(); ++i) {
            total[i] += hits[i];
        }
    }
    std::set<std::size_t> dead;
    for (const DeadClause &d : dead_clauses()) {
        dead.insert(d.line);
    }
    std::set<std::size_t> lines;
    for (std::size_t i = 0; i < total.size(); ++i) {
        const Clause &c = fixture().clauses()[i];
        lines.insert(c.line);
        EXPECT_TRUE(total[i] > 0 || dead.count(c.line))
            << "line " << c.line << " " << to_string(c.head) << " neither exercised nor documented dead";
    }
    for (std::size_t line : dead) {
        EXPECT_TRUE(lines.count(line)) << "dead_clauses() lists line " << line << ", which holds no clause";
    }
}

}  // namespace
}  // namespace qrw::inference
