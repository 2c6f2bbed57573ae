/*
 * Copyright 2026 The besgraph Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "besgraph/besgraph.hpp"

namespace besgraph::cli {

enum ExitCode : int { ok = 0, invalid_input = 1, precondition = 2, verification_failed = 3 };

namespace detail {

struct InputOptions {
    std::string path;
    std::string fixture;
};

inline void add_input(CLI::App *cmd, InputOptions &in) {
    cmd->add_option("path", in.path, "BES file");
    cmd->add_option("--fixture", in.fixture, "built-in system: mutex, paper-application, example-structure-graph");
}

inline std::string read_input(const InputOptions &in) {
    if (!in.fixture.empty()) {
        auto text = fixtures::find(in.fixture);
        if (!text) throw ValidationError("unknown fixture '" + in.fixture + "'");
        if (!in.path.empty()) throw ValidationError("give either a path or --fixture, not both");
        return std::string(*text);
    }
    if (in.path.empty()) throw ValidationError("no input: give a path or --fixture");
    std::ifstream f(in.path, std::ios::binary);
    if (!f) throw ValidationError("cannot read " + in.path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline std::string braces(const std::set<std::string> &s) {
    std::string out = "{";
    for (const auto &x : s) out += (out.size() > 1 ? ", " : "") + x;
    return out + "}";
}

inline std::string braces(const std::vector<std::string> &s) { return braces(std::set<std::string>(s.begin(), s.end())); }

inline int cmd_check(const EquationSystem &e, std::ostream &out) {
    if (e.empty()) {
        out << "empty system\n";
        return ok;
    }
    out << "equations: " << e.size() << "\n";
    out << "well-formed: yes\n";
    out << "closed: " << (is_closed(e) ? "yes" : "no") << "\n";
    out << "srf: " << (is_srf(e) ? "yes" : "no") << "\n";
    out << "bnd: " << braces(bnd(e)) << "\n";
    out << "occ: " << braces(occ(e)) << "\n";
    const auto r = ranks(e);
    for (std::size_t i = 0; i < e.size(); ++i) out << "rank " << e[i].lhs << " = " << r[i] << "\n";
    out << "alternation hierarchy: " << alternation_hierarchy(e) << "\n";
    out << "size: " << size(e) << "\n";
    return ok;
}

inline int cmd_solve(const EquationSystem &e, const std::string &method, std::ostream &out) {
    require_closed(e);
    if (e.empty()) return ok;
    const Assignment a = solve(e, method == "oracle" ? SolveMethod::oracle : SolveMethod::gauss);
    for (const auto &eq : e) out << eq.lhs << " = " << (a.at(eq.lhs) ? "true" : "false") << "\n";
    return ok;
}

struct GraphOptions {
    std::string formula;
    std::string out = "sgraph";
    bool srf = false, reduce = false, normalise = false, literal = false;
};

inline int cmd_graph(const EquationSystem &e, const GraphOptions &o, std::ostream &out) {
    require_nonempty(e);
    require_closed(e);
    const Formula init = o.formula.empty() ? Formula::variable(e[0].lhs) : parse_formula(o.formula);
    StructureGraph g = o.srf ? build_srf_graph(e, init)
                             : build_graph(e, init, o.literal ? PremiseReading::literal : PremiseReading::syntactic);
    if (o.reduce || o.normalise) g = reduce(g);
    if (o.normalise) g = normalise(g);
    out << (o.out == "dot" ? to_dot(g) : serialize(g));
    return ok;
}

inline int cmd_minimize(const EquationSystem &e, const std::string &emit, const std::string &format,
                        std::ostream &out) {
    require_nonempty(e);
    require_closed(e);
    const MinimisedBes m = minimise_bes(e);
    if (emit == "graph") {
        out << (format == "dot" ? to_dot(m.quotient) : serialize(m.quotient));
        return ok;
    }
    out << "// " << m.system.size() << " equations, size " << size(m.system) << ", initial formula "
        << to_string(m.formula) << "\n";
    out << print_bes(m.system);
    out << "---\n";
    for (const auto &eq : m.system) {
        auto it = m.legend.find(eq.lhs);
        if (it != m.legend.end()) out << eq.lhs << " <= " << braces(it->second) << "\n";
    }
    return ok;
}

inline int cmd_verify(const EquationSystem &e, std::ostream &out) {
    require_nonempty(e);
    require_closed(e);
    const VerifyReport r = verify_minimisation(e);
    out << "original: " << r.original_equations << " equations, size " << r.original_size << "\n";
    out << "minimised: " << r.minimised_equations << " equations, size " << r.minimised_size << "\n";
    out << "solvers: gauss" << (r.oracle_used ? " + oracle" : "") << "\n";
    if (r.pass) {
        out << "PASS: " << r.variables << " variables verified\n";
        return ok;
    }
    out << "FAIL: " << r.mismatches.size() << " mismatches\n";
    for (const auto &m : r.mismatches) out << "  " << m << "\n";
    return verification_failed;
}

} // namespace detail

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Structure graphs, bisimulation minimisation and solving of Boolean equation systems"};
    app.require_subcommand(1);

    detail::InputOptions in;

    auto *check = app.add_subcommand("check", "report static properties of a system");
    detail::add_input(check, in);

    std::string method = "gauss";
    auto *solve_cmd = app.add_subcommand("solve", "solve a closed system");
    detail::add_input(solve_cmd, in);
    solve_cmd->add_option("--method", method, "oracle or gauss")->check(CLI::IsMember({"oracle", "gauss"}));

    detail::GraphOptions gopt;
    auto *graph = app.add_subcommand("graph", "print the structure graph");
    detail::add_input(graph, in);
    graph->add_option("--formula", gopt.formula, "initial formula (default: first bound variable)");
    graph->add_option("--out", gopt.out, "sgraph or dot")->check(CLI::IsMember({"sgraph", "dot"}));
    graph->add_flag("--srf", gopt.srf, "use the SRF construction (input must be in SRF)");
    graph->add_flag("--reduce", gopt.reduce, "replace true/false nodes by ranked self-loops");
    graph->add_flag("--normalise", gopt.normalise, "rank every node (implies --reduce)");
    graph->add_flag("--literal-premises", gopt.literal, "experimental literal reading of operator premises");

    std::string emit = "bes", mformat = "sgraph";
    auto *minimize_cmd = app.add_subcommand("minimize", "minimise the structure graph modulo bisimilarity");
    detail::add_input(minimize_cmd, in);
    minimize_cmd->add_option("--emit", emit, "graph or bes")->check(CLI::IsMember({"graph", "bes"}));
    minimize_cmd->add_option("--out", mformat, "graph format: sgraph or dot")->check(CLI::IsMember({"sgraph", "dot"}));

    auto *verify = app.add_subcommand("verify", "check that minimisation preserves the solution");
    detail::add_input(verify, in);

    GenConfig gen;
    bool gen_srf = false;
    auto *generate = app.add_subcommand("generate", "print a random closed system");
    generate->add_option("--seed", gen.seed, "random seed");
    generate->add_option("--variables", gen.variable_count, "number of equations");
    generate->add_option("--depth", gen.max_rhs_depth, "maximal right-hand side depth");
    generate->add_option("--constants", gen.constant_probability, "probability of a constant leaf");
    generate->add_option("--and-bias", gen.operator_bias, "probability of a conjunction");
    generate->add_flag("--srf", gen_srf, "generate in standard recursive form");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : invalid_input;
    }

    try {
        if (generate->parsed()) {
            out << print_bes(gen_srf ? gen_srf_bes(gen) : gen_bes(gen));
            return ok;
        }
        const EquationSystem e = parse_bes(detail::read_input(in));
        if (check->parsed()) return detail::cmd_check(e, out);
        if (solve_cmd->parsed()) return detail::cmd_solve(e, method, out);
        if (graph->parsed()) return detail::cmd_graph(e, gopt, out);
        if (minimize_cmd->parsed()) return detail::cmd_minimize(e, emit, mformat, out);
        if (verify->parsed()) return detail::cmd_verify(e, out);
    } catch (const PreconditionError &e) {
        err << "error: " << e.what() << "\n";
        return precondition;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return invalid_input;
    }
    return ok;
}

} // namespace besgraph::cli
