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

#include "qrw/cli/execute.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "qrw/algebra/group.hpp"
#include "qrw/algebra/padic.hpp"
#include "qrw/cli/output.hpp"
#include "qrw/inference/best_first.hpp"
#include "qrw/inference/engine.hpp"
#include "qrw/inference/expert.hpp"
#include "qrw/inference/reader.hpp"
#include "qrw/inference/rule_base.hpp"
#include "qrw/primes/lattice.hpp"
#include "qrw/primes/log_integral.hpp"
#include "qrw/primes/prime_table.hpp"
#include "qrw/qsim/circuit.hpp"
#include "qrw/waves/constants.hpp"
#include "qrw/waves/identities.hpp"
#include "qrw/waves/phi.hpp"
#include "qrw/waves/wave_field.hpp"

namespace qrw::cli {
namespace {

using nlohmann::json;
namespace inf = qrw::inference;

json complex_json(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

void emit(const Command &cmd, std::ostream &out, const std::string &content) {
    if (cmd.out) {
        write_atomic(*cmd.out, content);
    } else {
        out << content;
    }
}

void emit_svg(const Command &cmd, const std::string &content) {
    if (cmd.svg) {
        write_atomic(*cmd.svg, content);
    }
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw ArgumentError("cannot read '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// qsim ------------------------------------------------------------------

int qsim_run(const Command &cmd, std::ostream &out) {
    const bool paper = cmd.circuit == "paper";
    const qsim::Circuit circuit = paper ? qsim::paper_circuit() : qsim::random_circuit(cmd.qubits, cmd.gates, cmd.seed);
    const qsim::RunResult result = qsim::run(circuit, cmd.seed, cmd.basis);

    json gates = json::array();
    for (const qsim::Gate &g : circuit.gates) {
        gates.push_back(qsim::describe(g));
    }
    json measurements = json::array();
    for (const auto &m : result.measurements) {
        measurements.push_back({{"bit", m.bit}, {"position", m.position}, {"qubit", m.qubit}});
    }
    json state = json::array();
    const auto amps = result.final_state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        state.push_back({{"index", i}, {"re", amps[i].real()}, {"im", amps[i].imag()},
                         {"probability", std::norm(amps[i])}});
    }
    json doc{{"circuit", cmd.circuit},
             {"gates", gates},
             {"num_qubits", circuit.num_qubits},
             {"initial_basis", cmd.basis},
             {"seed", result.seed},
             {"measurements", measurements},
             {"final_state", state}};
    if (paper) {
        constexpr std::size_t kIndex010 = 0b010;
        doc["reported_amplitude_010"] = {{"claimed", complex_json(qsim::kReportedAmplitude010)},
                                         {"observed", complex_json(result.final_state[kIndex010])}};
    }
    emit(cmd, out, render_json(doc));
    return 0;
}

// rules -----------------------------------------------------------------

inf::RuleBase load_rules(const Command &cmd) {
    return inf::load_rules_file(cmd.rules ? *cmd.rules : inf::default_rules_path());
}

json term_list(const std::vector<inf::Term> &terms) {
    json arr = json::array();
    for (const auto &t : terms) {
        arr.push_back(inf::to_string(t));
    }
    return arr;
}

int rules_classify(const Command &cmd, std::ostream &out) {
    const inf::RuleBase rules = load_rules(cmd);
    inf::QueryOptions options;
    options.depth_limit = cmd.depth_limit;
    inf::Classification c;
    if (!cmd.syn && !cmd.udp && !cmd.ipa) {
        c = inf::classify(rules, options);
    } else {
        // One read so that shared variable names denote the same variable.
        const std::string text = "t(" + cmd.syn.value_or("_") + "," + cmd.udp.value_or("_") + "," +
                                 cmd.ipa.value_or("_") + ")";
        const inf::ReadTerm read = inf::read_term(text);
        c = inf::classify(rules, read.term.arg(0), read.term.arg(1), read.term.arg(2), options);
    }
    json doc{{"classification", inf::to_string(c.term)},
             {"alternatives", term_list(c.alternatives)},
             {"unknown", c.unknown},
             {"truncated", c.truncated}};
    emit(cmd, out, render_json(doc));
    return 0;
}

int rules_query(const Command &cmd, std::ostream &out) {
    const inf::RuleBase rules = load_rules(cmd);
    inf::QueryOptions options;
    options.depth_limit = cmd.depth_limit;
    options.max_solutions = cmd.max_solutions;
    const inf::QueryResult result = inf::query(rules, cmd.goal, options);
    json solutions = json::array();
    for (const auto &s : result.solutions) {
        json row = json::object();
        for (const auto &[name, value] : s.bindings) {
            row[name] = inf::to_string(value);
        }
        solutions.push_back(row);
    }
    json doc{{"goal", cmd.goal},
             {"solutions", solutions},
             {"truncated", result.truncated},
             {"output", result.output}};
    emit(cmd, out, render_json(doc));
    return 0;
}

std::filesystem::path default_graph_path() {
    return inf::default_rules_path().parent_path() / "ports.graph.json";
}

int rules_scan(const Command &cmd, std::ostream &out) {
    const std::filesystem::path path = cmd.graph ? *cmd.graph : default_graph_path();
    json spec;
    try {
        spec = json::parse(read_file(path));
    } catch (const json::exception &e) {
        throw ArgumentError("port graph '" + path.string() + "': " + e.what());
    }
    std::map<std::string, std::size_t> index;
    std::vector<std::string> names;
    inf::SearchGraph graph;
    try {
        for (const auto &node : spec.at("nodes")) {
            const std::string name = node.at("name").get<std::string>();
            if (!index.emplace(name, names.size()).second) {
                throw ArgumentError("duplicate node '" + name + "'");
            }
            names.push_back(name);
            graph.heuristic.push_back(node.at("heuristic").get<double>());
            graph.goal.push_back(node.value("goal", false));
        }
        graph.successors.resize(names.size());
        auto lookup = [&](const std::string &name) {
            auto it = index.find(name);
            if (it == index.end()) {
                throw ArgumentError("edge references unknown node '" + name + "'");
            }
            return it->second;
        };
        for (const auto &edge : spec.at("edges")) {
            graph.successors[lookup(edge.at("from").get<std::string>())].push_back(
                {lookup(edge.at("to").get<std::string>()), edge.at("cost").get<double>()});
        }
        graph.validate();
        const std::size_t start = lookup(spec.at("start").get<std::string>());
        const auto found = inf::best_first(graph, start);
        json doc{{"graph", path.filename().string()}, {"start", names[start]}, {"found", found.has_value()}};
        if (found) {
            json path_names = json::array();
            for (std::size_t n : found->path) {
                path_names.push_back(names[n]);
            }
            doc["path"] = path_names;
            doc["cost"] = found->cost;
        }
        emit(cmd, out, render_json(doc));
    } catch (const json::exception &e) {
        throw ArgumentError("port graph '" + path.string() + "': " + e.what());
    }
    return 0;
}

// primes ----------------------------------------------------------------

int primes_lattice(const Command &cmd, std::ostream &out) {
    const primes::PrimeTable table = primes::sieve(std::max<std::uint64_t>(cmd.limit + 6, 2));
    const primes::LatticeGraph lattice = primes::build_lattice(cmd.limit, table);
    json triplets = json::array();
    bool sums_hold = true;
    for (const auto &t : lattice.triplets) {
        triplets.push_back({t[0], t[1], t[2]});
        sums_hold = sums_hold && (t[1] - t[0]) + (t[2] - t[1]) == t[2] - t[0];
    }
    json edges = json::array();
    for (const auto &e : lattice.edges) {
        edges.push_back({{"from", {{"tier", e.from.tier}, {"value", e.from.value}}},
                         {"to", {{"tier", e.to.tier}, {"value", e.to.value}}},
                         {"distance", e.distance}});
    }
    json doc{{"limit", lattice.limit},
             {"triplet_count", lattice.triplets.size()},
             {"triplets", triplets},
             {"tiers", {lattice.tiers[0], lattice.tiers[1], lattice.tiers[2]}},
             {"edges", edges},
             {"sum_identity_holds", sums_hold}};
    emit(cmd, out, render_json(doc));
    return 0;
}

int primes_li(const Command &cmd, std::ostream &out) {
    std::vector<std::uint64_t> ns = cmd.n;
    if (ns.empty()) {
        ns = {1'000, 10'000, 100'000, 1'000'000};
    }
    const primes::PrimeTable table = primes::sieve(*std::max_element(ns.begin(), ns.end()));
    std::vector<std::vector<std::string>> rows;
    for (std::uint64_t n : ns) {
        const double l = primes::li(static_cast<double>(n));
        const std::uint64_t p = table.pi(n);
        rows.push_back({std::to_string(n), format_number(l), std::to_string(p),
                        format_number(l / static_cast<double>(p))});
    }
    emit(cmd, out, render_csv({"n", "li", "pi", "ratio"}, rows));
    return 0;
}

// waves -----------------------------------------------------------------

double fixed_value(const Command &cmd, const std::string &symbol) {
    if (symbol == "theta") {
        return cmd.theta;
    }
    return symbol == "x" ? cmd.x : cmd.nval;
}

int waves_grid(const Command &cmd, std::ostream &out) {
    const waves::IdentityId id = waves::parse_identity(cmd.id);
    const std::vector<std::string> &symbols = waves::identity_symbols(id);
    std::vector<waves::AxisRange> axes;
    std::string axis = cmd.axis;
    if (axis.empty()) {
        axis = symbols.empty() ? "theta" : symbols.front();
    }
    axes.push_back({axis, cmd.min, cmd.max, cmd.points});
    const bool two_d = !cmd.axis2.empty();
    if (two_d) {
        axes.push_back({cmd.axis2, cmd.min2, cmd.max2, cmd.points2});
    }
    std::vector<std::string> header;
    for (const auto &a : axes) {
        header.push_back(a.symbol);
    }
    for (const std::string &s : symbols) {
        if (std::find(header.begin(), header.end(), s) == header.end()) {
            axes.push_back({s, fixed_value(cmd, s), fixed_value(cmd, s), 1});
            header.push_back(s);
        }
    }
    const std::vector<waves::IdentitySample> samples = waves::sample_grid(id, axes);
    auto input_of = [](const waves::IdentitySample &s, const std::string &symbol) {
        if (symbol == "theta") {
            return s.inputs.theta;
        }
        return symbol == "x" ? s.inputs.x : s.inputs.n;
    };
    std::vector<std::vector<std::string>> rows;
    Series re{"re", {}, {}}, im{"im", {}, {}};
    std::vector<double> heat;
    for (const auto &s : samples) {
        std::vector<std::string> row;
        for (const std::string &h : header) {
            row.push_back(format_number(input_of(s, h)));
        }
        const double r = s.value.indeterminate ? std::nan("") : s.value.value.real();
        const double i = s.value.indeterminate ? std::nan("") : s.value.value.imag();
        row.push_back(format_number(r));
        row.push_back(format_number(i));
        rows.push_back(std::move(row));
        re.xs.push_back(input_of(s, axis));
        re.ys.push_back(r);
        im.xs.push_back(input_of(s, axis));
        im.ys.push_back(i);
        heat.push_back(r);
    }
    header.push_back("re");
    header.push_back("im");
    emit(cmd, out, render_csv(header, rows));
    const std::string title = std::string(waves::identity_name(id)) + ": " + std::string(waves::identity_text(id));
    if (two_d && cmd.points2 > 0) {
        emit_svg(cmd, render_svg_heatmap(title + " (re)", cmd.points, cmd.points2, heat));
    } else {
        emit_svg(cmd, render_svg_polyline(title, {re, im}));
    }
    return 0;
}

int waves_propagate(const Command &cmd, std::ostream &out) {
    const double dx = cmd.length / static_cast<double>(cmd.grid - 1);
    const waves::WaveField initial =
        waves::gaussian_pulse(cmd.grid, dx, cmd.young, cmd.density, cmd.courant, cmd.length / 4.0, 1.0);
    const waves::WaveField final_field = waves::propagate_wave(initial, cmd.steps);
    std::vector<std::vector<std::string>> rows;
    Series before{"t=0", {}, {}}, after{"t=" + format_number(final_field.dt * static_cast<double>(cmd.steps)), {}, {}};
    for (std::size_t i = 0; i < cmd.grid; ++i) {
        const double x = dx * static_cast<double>(i);
        rows.push_back({format_number(x), format_number(final_field.current[i]), "0"});
        before.xs.push_back(x);
        before.ys.push_back(initial.current[i]);
        after.xs.push_back(x);
        after.ys.push_back(final_field.current[i]);
    }
    emit(cmd, out, render_csv({"x", "re", "im"}, rows));
    emit_svg(cmd, render_svg_polyline("Wave pulse, v = " + format_number(initial.speed()), {before, after}));
    return 0;
}

int waves_phi(const Command &cmd, std::ostream &out) {
    std::vector<std::vector<std::string>> rows;
    Series re{"re", {}, {}}, im{"im", {}, {}};
    for (std::size_t k = 0; k < cmd.points; ++k) {
        const double z = cmd.points == 1 ? cmd.min
                         : k + 1 == cmd.points
                             ? cmd.max
                             : cmd.min + (cmd.max - cmd.min) * static_cast<double>(k) /
                                             static_cast<double>(cmd.points - 1);
        const std::complex<double> v = waves::phi_closed(z);
        rows.push_back({format_number(z), format_number(v.real()), format_number(v.imag())});
        re.xs.push_back(z);
        re.ys.push_back(v.real());
        im.xs.push_back(z);
        im.ys.push_back(v.imag());
    }
    emit(cmd, out, render_csv({"z", "re", "im"}, rows));
    emit_svg(cmd, render_svg_polyline("phi(z) on the real axis", {re, im}));
    return 0;
}

int waves_constants(const Command &cmd, std::ostream &out) {
    const double four_theta = 4.0 * waves::radians(waves::kConvergenceAngleDeg);
    const double cube = waves::kPhiConstant * std::pow(std::numbers::pi, 3);
    json doc{{"convergence_angle_deg", waves::kConvergenceAngleDeg},
             {"four_theta_rad", four_theta},
             {"four_theta_matches_12_511", std::abs(four_theta - waves::kPhiConstant) <= 1e-3},
             {"phi_constant_times_pi_cubed", cube},
             {"pi_cubed_matches_387_9", std::abs(cube - waves::kPhiRootConstant) <= 0.1},
             {"phi_real_root", waves::phi_real_root()},
             {"polar_theta_deg", waves::polar_theta()},
             {"lambda_radio", waves::kLambdaRadio},
             {"lambda_ultraviolet", waves::kLambdaUltraviolet},
             {"vertical_angle_deg", waves::kVerticalAngleDeg},
             {"convergence_vector_length", waves::kConvergenceVectorLength}};
    emit(cmd, out, render_json(doc));
    const bool ok = doc["four_theta_matches_12_511"].get<bool>() && doc["pi_cubed_matches_387_9"].get<bool>();
    return ok ? 0 : 1;
}

// algebra ---------------------------------------------------------------

json check_entry(const std::string &name, bool passed, const std::string &detail) {
    return json{{"name", name}, {"passed", passed}, {"detail", detail}};
}

int algebra_check(const Command &cmd, std::ostream &out) {
    using namespace qrw::algebra;
    json checks = json::array();

    const GroupTable z6 = GroupTable::cyclic(6);
    const bool z6_ok = direct_sum_check(z6, make_subgroup(z6, {0, 3}), make_subgroup(z6, {0, 2, 4}));
    checks.push_back(check_entry("z6_direct_sum", z6_ok, "Z6 = {0,3} + {0,2,4}"));

    const GroupTable z4 = GroupTable::cyclic(4);
    const Subgroup two = make_subgroup(z4, {0, 2});
    bool has_complement = false;
    for (const Subgroup &k : all_subgroups(z4)) {
        has_complement = has_complement || direct_sum_check(z4, two, k);
    }
    const bool z4_ok = !has_complement && !is_pure_subgroup(z4, two);
    checks.push_back(check_entry("z4_counterexample", z4_ok, "{0,2} in Z4 is neither a summand nor pure"));

    std::size_t pairs = 0, violations = 0, quotient_failures = 0, collinear_failures = 0;
    for (std::size_t n = 1; n <= cmd.max_order; ++n) {
        const GroupTable g = GroupTable::cyclic(n);
        const std::vector<Subgroup> subs = all_subgroups(g);
        for (const Subgroup &h : subs) {
            const Quotient q = quotient(g, h);
            quotient_failures += q.table.order() * h.order() == g.order() ? 0 : 1;
            for (const Subgroup &k : subs) {
                if (!direct_sum_check(g, h, k)) {
                    continue;
                }
                ++pairs;
                violations += is_pure_subgroup(g, h) && is_pure_subgroup(g, k) ? 0 : 1;
                if (h.order() > 1 && k.order() > 1) {
                    collinear_failures += collinear_reading_holds(g, h, k) ? 0 : 1;
                }
            }
        }
    }
    checks.push_back(check_entry("summand_implies_pure", violations == 0,
                                 std::to_string(pairs) + " decompositions of Z_n, n <= " +
                                     std::to_string(cmd.max_order) + ", " + std::to_string(violations) +
                                     " impure summands"));
    checks.push_back(check_entry("lagrange", quotient_failures == 0,
                                 std::to_string(quotient_failures) + " quotient order mismatches"));
    checks.push_back(check_entry("collinear_reading", collinear_failures == 0,
                                 std::to_string(collinear_failures) + " proper decompositions violate the reading"));

    std::size_t field_mismatches = 0;
    for (std::uint64_t q = 2; q <= 97; ++q) {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= q; ++d) {
            prime = prime && q % d != 0;
        }
        field_mismatches += field_check(q) == prime ? 0 : 1;
    }
    checks.push_back(check_entry("field_check_matches_primality", field_mismatches == 0,
                                 "q in 2..97, " + std::to_string(field_mismatches) + " mismatches"));

    std::size_t padic_failures = 0;
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (std::uint64_t m = 0; m <= 10'000; ++m) {
            padic_failures += padic_value(padic_digits(m, p), p) == m ? 0 : 1;
        }
    }
    checks.push_back(check_entry("padic_round_trip", padic_failures == 0,
                                 "m <= 10000, p in {2,3,5,7}, " + std::to_string(padic_failures) + " failures"));

    bool all = true;
    for (const auto &c : checks) {
        all = all && c["passed"].get<bool>();
    }
    emit(cmd, out, render_json(json{{"checks", checks}, {"passed", all}}));
    return all ? 0 : 1;
}

std::string json_quote(const std::string &text) { return json(text).dump(); }

}  // namespace

int execute(const Command &cmd, std::ostream &out) {
    const std::string key = cmd.subcommand + " " + cmd.action;
    if (key == "qsim run") return qsim_run(cmd, out);
    if (key == "rules classify") return rules_classify(cmd, out);
    if (key == "rules query") return rules_query(cmd, out);
    if (key == "rules scan") return rules_scan(cmd, out);
    if (key == "primes lattice") return primes_lattice(cmd, out);
    if (key == "primes li") return primes_li(cmd, out);
    if (key == "waves grid") return waves_grid(cmd, out);
    if (key == "waves propagate") return waves_propagate(cmd, out);
    if (key == "waves phi") return waves_phi(cmd, out);
    if (key == "waves constants") return waves_constants(cmd, out);
    if (key == "algebra check") return algebra_check(cmd, out);
    throw UsageError("unknown command '" + key + "'");
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Command cmd;
    try {
        cmd = parse_args(args, seed_from_environment());
    } catch (const HelpRequested &help) {
        out << help.text();
        return 0;
    } catch (const UsageError &e) {
        err << "error kind=usage message=" << json_quote(e.what()) << "\n";
        return 2;
    }
    try {
        const int status = execute(cmd, out);
        if (status != 0) {
            err << "error kind=check message=" << json_quote(cmd.subcommand + " " + cmd.action + " reported failures")
                << "\n";
        }
        return status;
    } catch (const UsageError &e) {
        err << "error kind=usage message=" << json_quote(e.what()) << "\n";
        return 2;
    } catch (const Error &e) {
        err << "error kind=" << e.kind() << " message=" << json_quote(e.what()) << "\n";
        return 1;
    } catch (const std::exception &e) {
        err << "error kind=internal message=" << json_quote(e.what()) << "\n";
        return 1;
    }
}

}  // namespace qrw::cli
