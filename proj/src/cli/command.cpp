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

#include "qrw/cli/command.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include <CLI11.hpp>

namespace qrw::cli {
namespace {

struct Parser {
    CLI::App app{"Desk-scale verification toolkit", "qrw"};
    Command cmd;
    std::vector<CLI::App *> actions;
    std::vector<CLI::Option *> seed_options;

    CLI::App *action(CLI::App *group, const std::string &name, const std::string &description) {
        CLI::App *sub = group->add_subcommand(name, description);
        seed_options.push_back(sub->add_option("--seed", cmd.seed, "Random seed (default 0, or QRW_SEED)"));
        sub->add_option("--out", cmd.out, "Output file (default: standard output)");
        actions.push_back(sub);
        return sub;
    }

    Parser() {
        app.require_subcommand(1);
        app.set_help_all_flag("--help-all", "Usage of every subcommand");

        CLI::App *qsim = app.add_subcommand("qsim", "State-vector circuit simulation")->require_subcommand(1);
        CLI::App *run = action(qsim, "run", "Run the reference circuit or a seeded random circuit; emits JSON");
        run->add_option("--circuit", cmd.circuit, "paper | random")->check(CLI::IsMember({"paper", "random"}));
        run->add_option("--qubits", cmd.qubits, "Qubit count for random circuits")->check(CLI::Range(1u, 16u));
        run->add_option("--gates", cmd.gates, "Gate count for random circuits")->check(CLI::Range(0, 4096));
        run->add_option("--basis", cmd.basis, "Initial basis index");

        CLI::App *rules = app.add_subcommand("rules", "Rule engine over the port-scanning knowledge base")
                              ->require_subcommand(1);
        CLI::App *classify = action(rules, "classify", "Classify a (syn, udp, ipa) triple; emits JSON");
        classify->add_option("--rules", cmd.rules, "Rule file (default: bundled fixture)");
        classify->add_option("--syn", cmd.syn, "SYN argument term (default: fresh variable)");
        classify->add_option("--udp", cmd.udp, "UDP argument term (default: fresh variable)");
        classify->add_option("--ipa", cmd.ipa, "IPA argument term (default: fresh variable)");
        classify->add_option("--depth-limit", cmd.depth_limit, "Resolution depth limit")->check(CLI::PositiveNumber);
        CLI::App *query = action(rules, "query", "Run a goal against the rule file; emits JSON");
        query->add_option("--rules", cmd.rules, "Rule file (default: bundled fixture)");
        query->add_option("--goal", cmd.goal, "Goal text, e.g. \"device(X)\"")->required();
        query->add_option("--max", cmd.max_solutions, "Maximum solutions")->check(CLI::PositiveNumber);
        query->add_option("--depth-limit", cmd.depth_limit, "Resolution depth limit")->check(CLI::PositiveNumber);
        CLI::App *scan = action(rules, "scan", "Best-first search over a port graph; emits JSON");
        scan->add_option("--graph", cmd.graph, "Port graph JSON (default: bundled fixture)");

        CLI::App *primes = app.add_subcommand("primes", "Sieve, logarithmic integral, triplet lattice")
                               ->require_subcommand(1);
        CLI::App *lattice = action(primes, "lattice", "Triplet lattice up to --limit; emits JSON");
        lattice->add_option("--limit", cmd.limit, "Largest triplet member")->check(CLI::Range(2, 10'000'000));
        CLI::App *li = action(primes, "li", "li(n) against pi(n); emits CSV");
        li->add_option("--n", cmd.n, "Evaluation points (repeatable; default 10^3..10^6)")
            ->check(CLI::Range(2, 100'000'000));

        CLI::App *waves = app.add_subcommand("waves", "Complex identities and the wave propagator")
                              ->require_subcommand(1);
        CLI::App *grid = action(waves, "grid", "Sample an identity on a 1-D or 2-D grid; emits CSV");
        grid->add_option("--id", cmd.id, "Identity name or alias, e.g. eq53 or sine-pair");
        grid->add_option("--axis", cmd.axis, "Swept symbol (default: first symbol of the identity)");
        grid->add_option("--min", cmd.min, "Axis start");
        grid->add_option("--max", cmd.max, "Axis end");
        grid->add_option("--points", cmd.points, "Axis samples");
        grid->add_option("--axis2", cmd.axis2, "Second swept symbol");
        grid->add_option("--min2", cmd.min2, "Second axis start");
        grid->add_option("--max2", cmd.max2, "Second axis end");
        grid->add_option("--points2", cmd.points2, "Second axis samples");
        grid->add_option("--theta", cmd.theta, "Fixed theta when not swept");
        grid->add_option("--x", cmd.x, "Fixed x when not swept");
        grid->add_option("--n", cmd.nval, "Fixed n when not swept");
        grid->add_option("--svg", cmd.svg, "Also write an SVG plot");
        CLI::App *propagate = action(waves, "propagate", "Propagate a Gaussian pulse; emits CSV");
        propagate->add_option("--young", cmd.young, "Young's modulus analog")->check(CLI::PositiveNumber);
        propagate->add_option("--density", cmd.density, "Linear density")->check(CLI::PositiveNumber);
        propagate->add_option("--courant", cmd.courant, "Courant number")->check(CLI::Range(0.0, 1.0));
        propagate->add_option("--grid", cmd.grid, "Grid points")->check(CLI::Range(3, 1'000'000));
        propagate->add_option("--length", cmd.length, "Domain length")->check(CLI::PositiveNumber);
        propagate->add_option("--steps", cmd.steps, "Time steps");
        propagate->add_option("--svg", cmd.svg, "Also write an SVG plot");
        CLI::App *phi = action(waves, "phi", "Sample the analytic function phi on the real axis; emits CSV");
        phi->add_option("--min", cmd.min, "Start of z range");
        phi->add_option("--max", cmd.max, "End of z range");
        phi->add_option("--points", cmd.points, "Samples");
        phi->add_option("--svg", cmd.svg, "Also write an SVG plot");
        action(waves, "constants", "Named constants and their coherence checks; emits JSON");

        CLI::App *algebra = app.add_subcommand("algebra", "Finite abelian group checks")->require_subcommand(1);
        CLI::App *check = action(algebra, "check", "Exhaustive algebra report; emits JSON");
        check->add_option("--max-order", cmd.max_order, "Largest cyclic group swept")->check(CLI::Range(1, 64));
    }

    std::string help_for_selected() const {
        const CLI::App *deepest = &app;
        for (bool descended = true; descended;) {
            descended = false;
            for (const CLI::App *sub : deepest->get_subcommands()) {
                deepest = sub;
                descended = true;
                break;
            }
        }
        return deepest->help();
    }
};

std::uint64_t parse_seed_text(const std::string &text) {
    std::uint64_t value = 0;
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end) {
        throw UsageError("QRW_SEED must be an unsigned integer, got '" + text + "'");
    }
    return value;
}

}  // namespace

std::optional<std::string> seed_from_environment() {
    if (const char *value = std::getenv("QRW_SEED")) {
        return std::string(value);
    }
    return std::nullopt;
}

Command parse_args(const std::vector<std::string> &args, std::optional<std::string> env_seed) {
    Parser parser;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        parser.app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        throw HelpRequested(parser.help_for_selected());
    } catch (const CLI::CallForAllHelp &) {
        throw HelpRequested(parser.app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError &e) {
        throw UsageError(e.what());
    }
    Command cmd = parser.cmd;
    for (const CLI::App *sub : parser.app.get_subcommands()) {
        cmd.subcommand = sub->get_name();
        cmd.action = sub->get_subcommands().front()->get_name();
    }
    const bool seed_given = std::any_of(parser.seed_options.begin(), parser.seed_options.end(),
                                        [](const CLI::Option *o) { return o->count() > 0; });
    if (!seed_given && env_seed) {
        cmd.seed = parse_seed_text(*env_seed);
    }
    return cmd;
}

}  // namespace qrw::cli
