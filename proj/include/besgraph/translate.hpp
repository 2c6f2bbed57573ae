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

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "besgraph/bes.hpp"
#include "besgraph/error.hpp"
#include "besgraph/formula.hpp"
#include "besgraph/sgraph.hpp"
#include "besgraph/transform.hpp"

namespace besgraph {

/// Nested conjunction of a set of formulae, splitting off the least one:
/// {t} -> t, {t} + T -> t && meet(T).
inline Formula meet(std::vector<Formula> terms, bool conj = true) {
    if (terms.empty()) throw PreconditionError("meet of an empty set");
    std::sort(terms.begin(), terms.end(), FormulaOrder{});
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    Formula acc = terms.back();
    for (std::size_t i = terms.size() - 1; i-- > 0;)
        acc = conj ? Formula::conj(terms[i], acc) : Formula::disj(terms[i], acc);
    return acc;
}

inline Formula join(std::vector<Formula> terms) { return meet(std::move(terms), false); }

/// Reconstructs formulae and equations from a BESsy structure graph.
class GraphTranslator {
public:
    explicit GraphTranslator(const StructureGraph &g) : g_(g), terms_(g.size()) {
        require_bessy(g);
        std::vector<std::size_t> ranked;
        for (std::size_t u = 0; u < g.size(); ++u)
            if (g.deco(u).ranked() || g.deco(u).op == Op::none) ranked.push_back(u);
        std::sort(ranked.begin(), ranked.end(), [&](std::size_t a, std::size_t b) {
            const auto &la = g.node(a).label, &lb = g.node(b).label;
            if (LabelOrder{}(la, lb)) return true;
            if (LabelOrder{}(lb, la)) return false;
            return a < b;
        });
        FreshNames fresh({});
        names_.assign(g.size(), std::nullopt);
        for (std::size_t u : ranked) {
            const std::string &label = g.node(u).label;
            const bool readable = is_identifier(label) || label == "true" || label == "false";
            names_[u] = fresh.exact_or_derived("X_" + (readable ? label : g.node(u).id));
        }
    }

    /// Generated variable of a ranked node. Undecorated leaves also get one;
    /// it stays free in the translated system.
    const std::optional<std::string> &variable(std::size_t u) const { return names_[u]; }

    Formula term(std::size_t u) {
        if (terms_[u]) return *terms_[u];
        const Decoration &d = g_.deco(u);
        Formula out;
        if (d.op == Op::top) out = Formula::truth();
        else if (d.op == Op::bot) out = Formula::falsity();
        else if (!d.ranked() && (d.op == Op::and_sym || d.op == Op::or_sym))
            out = combine(u, d.op == Op::and_sym);
        else if (names_[u])
            out = Formula::variable(*names_[u]);
        else
            throw PreconditionError("node " + g_.node(u).id + " has no term");
        terms_[u] = out;
        return out;
    }

    Formula rhs(std::size_t u) {
        const Decoration &d = g_.deco(u);
        const auto &s = g_.successors(u);
        if (s.empty()) throw PreconditionError("node " + g_.node(u).id + " has no successor");
        if (d.op == Op::and_sym) return combine(u, true);
        if (d.op == Op::or_sym) return combine(u, false);
        return term(s.front());
    }

private:
    Formula combine(std::size_t u, bool conj) {
        std::vector<Formula> parts;
        for (std::size_t v : g_.successors(u)) parts.push_back(term(v));
        return meet(std::move(parts), conj);
    }

    const StructureGraph &g_;
    std::vector<std::optional<std::string>> names_;
    std::vector<std::optional<Formula>> terms_;
};

inline Formula term(const StructureGraph &g, std::size_t u) { return GraphTranslator(g).term(u); }
inline Formula rhs(const StructureGraph &g, std::size_t u) { return GraphTranslator(g).rhs(u); }

struct BackTranslation {
    /// term of the initial node
    Formula formula;
    EquationSystem system;
    /// generated variable per node; empty for unranked operator and constant nodes
    std::vector<std::optional<std::string>> variable_of;
};

/// One equation per ranked node, mu iff its rank is odd, ordered by rank and
/// then by variable name.
inline BackTranslation graph_to_bes(const StructureGraph &g) {
    GraphTranslator tr(g);
    std::vector<std::tuple<unsigned, std::string, std::size_t>> order;
    for (std::size_t u = 0; u < g.size(); ++u) {
        const Decoration &d = g.deco(u);
        if (!d.ranked()) continue;
        if (d.ranks.size() > 1)
            throw PreconditionError("node " + g.node(u).id + " carries several ranks; only single ranks translate");
        order.emplace_back(*d.max_rank(), *tr.variable(u), u);
    }
    std::sort(order.begin(), order.end());
    std::vector<Equation> equations;
    for (const auto &[r, name, u] : order)
        equations.push_back(Equation{r % 2 ? Fixpoint::mu : Fixpoint::nu, name, tr.rhs(u)});
    BackTranslation out;
    out.formula = tr.term(g.init());
    out.system = EquationSystem(std::move(equations));
    for (std::size_t u = 0; u < g.size(); ++u) out.variable_of.push_back(tr.variable(u));
    return out;
}

} // namespace besgraph
