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

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "qrw/cli/command.hpp"
#include "qrw/cli/execute.hpp"
#include "qrw/cli/output.hpp"
#include "support/cli_cases.hpp"

namespace qrw::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome run(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    const int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

class TempDir {
   public:
    TempDir() : path_(fs::temp_directory_path() / ("qrw_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    const fs::path &path() const { return path_; }

   private:
    fs::path path_;
};

TEST(ParseArgs, TypedFields) {
    const Command c = parse_args({"qsim", "run", "--circuit", "random", "--qubits", "3", "--seed", "42"});
    EXPECT_EQ(c.subcommand, "qsim");
    EXPECT_EQ(c.action, "run");
    EXPECT_EQ(c.circuit, "random");
    EXPECT_EQ(c.qubits, 3u);
    EXPECT_EQ(c.seed, 42u);
    EXPECT_FALSE(c.out.has_value());

    const Command w = parse_args({"waves", "grid", "--id", "eq63", "--axis", "x", "--n", "2.5", "--out", "a.csv"});
    EXPECT_EQ(w.id, "eq63");
    EXPECT_EQ(w.axis, "x");
    EXPECT_EQ(w.nval, 2.5);
    EXPECT_EQ(w.out, fs::path("a.csv"));

    const Command p = parse_args({"primes", "li", "--n", "100", "--n", "1000"});
    EXPECT_EQ(p.n, (std::vector<std::uint64_t>{100, 1000}));
}

TEST(ParseArgs, SeedDefaultsAndEnvironment) {
    EXPECT_EQ(parse_args({"qsim", "run"}).seed, 0u);
    EXPECT_EQ(parse_args({"qsim", "run"}, "99").seed, 99u);
    EXPECT_EQ(parse_args({"qsim", "run", "--seed", "5"}, "99").seed, 5u);
    EXPECT_THROW(parse_args({"qsim", "run"}, "abc"), UsageError);
}

TEST(ParseArgs, Rejections) {
    EXPECT_THROW(parse_args({}), UsageError);
    EXPECT_THROW(parse_args({"bogus"}), UsageError);
    EXPECT_THROW(parse_args({"qsim", "run", "--unknown"}), UsageError);
    EXPECT_THROW(parse_args({"qsim", "run", "--circuit", "other"}), UsageError);
    EXPECT_THROW(parse_args({"qsim", "run", "--qubits", "0"}), UsageError);
    EXPECT_THROW(parse_args({"rules", "query"}), UsageError);
    EXPECT_THROW(parse_args({"waves", "propagate", "--courant", "1.5"}), UsageError);
    EXPECT_THROW(parse_args({"primes", "li", "--n", "1"}), UsageError);
}

TEST(ParseArgs, Help) {
    try {
        parse_args({"waves", "grid", "--help"});
        FAIL() << "expected HelpRequested";
    } catch (const HelpRequested &h) {
        EXPECT_NE(h.text().find("--axis"), std::string::npos);
    }
    const Outcome o = run({"--help"});
    EXPECT_EQ(o.status, 0);
    EXPECT_NE(o.out.find("qsim"), std::string::npos);
}

TEST(RunCli, ExitCodesAndErrorLine) {
    const Outcome usage = run({"bogus"});
    EXPECT_EQ(usage.status, 2);
    EXPECT_EQ(usage.err.rfind("error kind=usage message=\"", 0), 0u) << usage.err;
    EXPECT_EQ(std::count(usage.err.begin(), usage.err.end(), '\n'), 1);

    const Outcome module = run({"waves", "grid", "--id", "eq99"});
    EXPECT_EQ(module.status, 1);
    EXPECT_EQ(module.err.rfind("error kind=argument message=", 0), 0u) << module.err;
    EXPECT_TRUE(module.out.empty());

    const Outcome parse = run({"rules", "query", "--goal", "device(X"});
    EXPECT_EQ(parse.status, 1);
    EXPECT_EQ(parse.err.rfind("error kind=parse", 0), 0u) << parse.err;

    const Outcome missing = run({"rules", "classify", "--rules", "/nonexistent/rules.pl"});
    EXPECT_EQ(missing.status, 1);
    EXPECT_FALSE(missing.err.empty());
}

TEST(RunCli, JsonShapes) {
    const auto qsim = nlohmann::json::parse(run({"qsim", "run"}).out);
    EXPECT_EQ(qsim["num_qubits"], 4);
    EXPECT_TRUE(qsim.contains("reported_amplitude_010"));
    EXPECT_EQ(qsim["final_state"].size(), 16u);

    const auto cls = nlohmann::json::parse(run({"rules", "classify"}).out);
    EXPECT_EQ(cls["classification"], "classification(syn|syn,udp|udp,ipa|ipa)");

    const auto q = nlohmann::json::parse(run({"rules", "query", "--goal", "device(X)"}).out);
    EXPECT_EQ(q["solutions"].size(), 5u);

    const auto scan = nlohmann::json::parse(run({"rules", "scan"}).out);
    EXPECT_TRUE(scan["found"].get<bool>());
    EXPECT_EQ(scan["cost"], 5);

    const auto lattice = nlohmann::json::parse(run({"primes", "lattice", "--limit", "10"}).out);
    EXPECT_EQ(lattice["triplet_count"], 1);
    EXPECT_TRUE(lattice["sum_identity_holds"].get<bool>());

    const Outcome algebra = run({"algebra", "check"});
    EXPECT_EQ(algebra.status, 0);
    EXPECT_TRUE(nlohmann::json::parse(algebra.out)["passed"].get<bool>());
    EXPECT_EQ(run({"waves", "constants"}).status, 0);
}

TEST(RunCli, CsvOutput) {
    const Outcome o = run({"waves", "grid", "--id", "eq53", "--points", "5"});
    ASSERT_EQ(o.status, 0);
    std::istringstream lines(o.out);
    std::string header;
    std::getline(lines, header);
    EXPECT_EQ(header, "theta,re,im");
    std::size_t rows = 0;
    for (std::string row; std::getline(lines, row);) {
        EXPECT_EQ(std::count(row.begin(), row.end(), ','), 2);
        ++rows;
    }
    EXPECT_EQ(rows, 5u);
    EXPECT_EQ(o.out.find('\r'), std::string::npos);

    const Outcome li = run({"primes", "li", "--n", "1000"});
    EXPECT_EQ(li.out.substr(0, li.out.find('\n')), "n,li,pi,ratio");
    EXPECT_NE(li.out.find("\n1000,"), std::string::npos);
}

TEST(RunCli, FilesAreWrittenAtomically) {
    TempDir dir;
    const fs::path csv = dir.path() / "eq53.csv";
    const fs::path svg = dir.path() / "eq53.svg";
    const Outcome o =
        run({"waves", "grid", "--id", "eq53", "--points", "17", "--out", csv.string(), "--svg", svg.string()});
    ASSERT_EQ(o.status, 0) << o.err;
    EXPECT_TRUE(o.out.empty());
    EXPECT_EQ(slurp(csv), run({"waves", "grid", "--id", "eq53", "--points", "17"}).out);
    const std::string plot = slurp(svg);
    EXPECT_NE(plot.find("<svg"), std::string::npos);
    EXPECT_NE(plot.find("</svg>"), std::string::npos);
    EXPECT_NE(plot.find("polyline"), std::string::npos);
    for (const auto &entry : fs::directory_iterator(dir.path())) {
        EXPECT_EQ(entry.path().string().find(".tmp"), std::string::npos) << entry.path();
    }
}

TEST(Output, NumberFormatting) {
    EXPECT_EQ(format_number(0.1), "0.1");
    EXPECT_EQ(format_number(-0.0), "0");
    EXPECT_EQ(format_number(1e21), "1e+21");
    EXPECT_EQ(format_number(std::nan("")), "nan");
    EXPECT_EQ(format_number(-std::numeric_limits<double>::infinity()), "-inf");
    EXPECT_EQ(std::stod(format_number(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Determinism, EveryCommandIsByteIdenticalAcrossRuns) {
    TempDir dir;
    for (const auto &args : qrw::testing::cli_cases()) {
        const Outcome a = run(args);
        const Outcome b = run(args);
        std::string label;
        for (const auto &s : args) {
            label += s + " ";
        }
        EXPECT_EQ(a.status, b.status) << label;
        EXPECT_EQ(a.out, b.out) << label;
        EXPECT_EQ(a.err, b.err) << label;
        EXPECT_FALSE(a.out.empty()) << label;

        auto with_file = args;
        with_file.push_back("--out");
        with_file.push_back((dir.path() / "artifact").string());
        ASSERT_EQ(run(with_file).status, a.status) << label;
        EXPECT_EQ(slurp(dir.path() / "artifact"), a.out) << label;
    }
}

TEST(Determinism, SeedChangesRandomCircuit) {
    const std::vector<std::string> base = {"qsim", "run", "--circuit", "random", "--gates", "60"};
    auto s1 = base;
    s1.insert(s1.end(), {"--seed", "1"});
    auto s2 = base;
    s2.insert(s2.end(), {"--seed", "2"});
    EXPECT_NE(run(s1).out, run(s2).out);
}

}  // namespace
}  // namespace qrw::cli
