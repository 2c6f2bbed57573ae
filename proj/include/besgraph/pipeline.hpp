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
#include <map>
#include <string>
#include <vector>

#include "besgraph/bes.hpp"
#include "besgraph/bisim.hpp"
#include "besgraph/solver.hpp"
#include "besgraph/sos.hpp"
#include "besgraph/translate.hpp"

namespace besgraph {

/// Bisimulation quotient of a system's structure graph, translated back.
struct MinimisedBes {
    Formula formula;
    EquationSystem system;
    StructureGraph quotient;
    /// original bound variable -> variable of its block
    std::map<std::string, std::string> image;
    /// block variable -> original bound variables in that block
    std::map<std::string, std::vector<std::string>> legend;
};

namespace detail {

inline MinimisedBes minimise_graph_of(const EquationSystem &e, const StructureGraph &g) {
    Quotient q = minimize(g);
    BackTranslation bt = graph_to_bes(q.graph);
    MinimisedBes out{bt.formula, std::move(bt.system), std::move(q.graph), {}, {}};
    for (const auto &eq : e) {
        const std::size_t node = *g.find_label(eq.lhs);
        const std::string &v = *bt.variable_of[q.block_of[node]];
        out.image[eq.lhs] = v;
        out.legend[v].push_back(eq.lhs);
    }
    return out;
}

} // namespace detail

/// Minimises the structure graph of `e` as built, constants included.
inline MinimisedBes minimise_bes(const EquationSystem &e) { return detail::minimise_graph_of(e, build_graph(e)); }

/// Minimises after reduce and normalise; the result is in SRF-like shape.
inline MinimisedBes minimise_normalised_bes(const EquationSystem &e) {
    return detail::minimise_graph_of(e, normalise(reduce(build_graph(e))));
}

struct VerifyReport {
    bool pass = true;
    std::size_t variables = 0;
    std::size_t original_equations = 0;
    std::size_t minimised_equations = 0;
    std::size_t original_size = 0;
    std::size_t minimised_size = 0;
    bool oracle_used = false;
    std::vector<std::string> mismatches;
    MinimisedBes minimised;
};

/// Runs build, reduce, normalise, minimise and back-translation, solves the
/// original and the minimised system with Gauss elimination and, for systems
/// of at most `oracle_limit` equations, with the recursive semantics too, and
/// compares every original variable with its block variable.
inline VerifyReport verify_minimisation(const EquationSystem &e, std::size_t oracle_limit = 16) {
    VerifyReport r;
    r.minimised = minimise_normalised_bes(e);
    r.variables = e.size();
    r.original_equations = e.size();
    r.minimised_equations = r.minimised.system.size();
    r.original_size = size(e);
    r.minimised_size = size(r.minimised.system);

    const Assignment orig = solve_gauss(e);
    const Assignment mini = solve_gauss(r.minimised.system);
    auto show = [](bool b) { return b ? std::string("true") : std::string("false"); };
    if (e.size() <= oracle_limit && r.minimised.system.size() <= oracle_limit) {
        r.oracle_used = true;
        const Assignment orig_oracle = solve_oracle(e);
        const Assignment mini_oracle = solve_oracle(r.minimised.system);
        for (const auto &[x, v] : orig)
            if (orig_oracle.at(x) != v)
                r.mismatches.push_back(x + ": gauss=" + show(v) + " oracle=" + show(orig_oracle.at(x)));
        for (const auto &[x, v] : mini)
            if (mini_oracle.at(x) != v)
                r.mismatches.push_back(x + ": gauss=" + show(v) + " oracle=" + show(mini_oracle.at(x)) +
                                       " (minimised)");
    }
    for (const auto &eq : e) {
        const std::string &image = r.minimised.image.at(eq.lhs);
        if (orig.at(eq.lhs) != mini.at(image))
            r.mismatches.push_back(eq.lhs + ": original=" + show(orig.at(eq.lhs)) + " " + image +
                                   "=" + show(mini.at(image)));
    }
    r.pass = r.mismatches.empty();
    return r;
}

} // namespace besgraph
