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
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "besgraph/bes.hpp"
#include "besgraph/bisim.hpp"
#include "besgraph/error.hpp"
#include "besgraph/formula.hpp"
#include "besgraph/sgraph.hpp"
#include "besgraph/translate.hpp"

namespace besgraph {

/// How the operator premises of the construction rules are read.
///
/// `syntactic`: a formula counts as a conjunction (disjunction) iff it is one
/// syntactically. This is the reading every worked example follows.
/// `literal`: additionally a variable counts as a conjunction when the
/// right-hand side of its equation does, so flattening looks through
/// variables. Experimental.
enum class PremiseReading { syntactic, literal };

namespace detail {

// Collects nodes, decorations and edges for formulas in the context of a
// closed system, then emits the part reachable from the roots.
class GraphConstruction {
public:
    GraphConstruction(const EquationSystem &e, PremiseReading reading) : e_(e), reading_(reading) {
        require_nonempty(e);
        require_closed(e);
        const auto r = ranks(e);
        for (std::size_t i = 0; i < e.size(); ++i) rank_[e[i].lhs] = r[i];
        if (reading_ == PremiseReading::literal) derive_variable_operators();
    }

    StructureGraph build(const Formula &root) {
        for (const auto &x : occ(root))
            if (!e_.binds(x)) throw PreconditionError("formula mentions unbound variable " + x);
        std::vector<Formula> roots{root};
        for (const auto &eq : e_) roots.push_back(Formula::variable(eq.lhs));
        if (reading_ == PremiseReading::literal) solve_literal_edges(roots);
        for (const auto &f : roots) intern(f);
        for (std::size_t k = 0; k < formulas_.size(); ++k) {
            std::vector<std::size_t> s;
            for (const Formula &t : successors(formulas_[k])) s.push_back(intern(t));
            succ_.push_back(std::move(s));
        }
        return emit(index_.at(to_string(root)));
    }

private:
    bool is_and(const Formula &f) const {
        if (f.is_and_like()) return true;
        return f.is_variable() && reading_ == PremiseReading::literal && var_and_.count(f.name());
    }
    bool is_or(const Formula &f) const {
        if (f.is_or_like()) return true;
        return f.is_variable() && reading_ == PremiseReading::literal && var_or_.count(f.name());
    }

    Decoration decoration(const Formula &f) const {
        Decoration d;
        switch (f.kind()) {
        case Formula::Kind::constant: d.op = f.value() ? Op::top : Op::bot; break;
        case Formula::Kind::variable: {
            const Formula &r = e_.equation_for(f.name()).rhs;
            d.op = is_and(r) ? Op::and_sym : is_or(r) ? Op::or_sym : Op::none;
            d.ranks.insert(rank_.at(f.name()));
            break;
        }
        case Formula::Kind::conjunction:
        case Formula::Kind::and_set: d.op = Op::and_sym; break;
        case Formula::Kind::disjunction:
        case Formula::Kind::or_set: d.op = Op::or_sym; break;
        }
        return d;
    }

    // Operands of an operand: a same-connective operand is replaced by its
    // own successors, anything else stays a direct successor.
    void expand(const Formula &f, bool conj, std::vector<Formula> &out) const {
        if (conj ? is_and(f) : is_or(f)) {
            const auto s = successors(f);
            out.insert(out.end(), s.begin(), s.end());
        } else {
            out.push_back(f);
        }
    }

    std::vector<Formula> successors(const Formula &f) const {
        std::vector<Formula> out;
        switch (f.kind()) {
        case Formula::Kind::constant: break;
        case Formula::Kind::variable: {
            if (reading_ == PremiseReading::literal) return literal_succ_.at(f.name());
            const Formula &r = e_.equation_for(f.name()).rhs;
            if (is_and(r) || is_or(r)) out = successors(r);
            else out.push_back(r);
            break;
        }
        case Formula::Kind::conjunction:
        case Formula::Kind::disjunction: {
            const bool conj = f.kind() == Formula::Kind::conjunction;
            expand(f.left(), conj, out);
            expand(f.right(), conj, out);
            break;
        }
        case Formula::Kind::and_set:
        case Formula::Kind::or_set:
            for (const auto &m : f.members()) out.push_back(Formula::variable(m));
            break;
        }
        return out;
    }

    // Least solution of "X counts as a conjunction iff its rhs does".
    void derive_variable_operators() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto &eq : e_) {
                if (is_and(eq.rhs) && var_and_.insert(eq.lhs).second) changed = true;
                if (is_or(eq.rhs) && var_or_.insert(eq.lhs).second) changed = true;
            }
        }
    }

    // Under the literal reading variable successors depend on each other;
    // iterate from empty successor sets until stable.
    void solve_literal_edges(const std::vector<Formula> &) {
        for (const auto &eq : e_) literal_succ_[eq.lhs] = {};
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto &eq : e_) {
                std::vector<Formula> next;
                if (is_and(eq.rhs) || is_or(eq.rhs)) next = successors(eq.rhs);
                else next.push_back(eq.rhs);
                std::map<std::string, Formula> dedup;
                for (auto &t : next) dedup.emplace(to_string(t), t);
                std::vector<Formula> sorted;
                for (auto &[k, t] : dedup) sorted.push_back(t);
                auto &cur = literal_succ_[eq.lhs];
                if (sorted.size() != cur.size() || !std::equal(sorted.begin(), sorted.end(), cur.begin())) {
                    cur = std::move(sorted);
                    changed = true;
                }
            }
        }
    }

    std::size_t intern(const Formula &f) {
        std::string key = to_string(f);
        auto it = index_.find(key);
        if (it != index_.end()) return it->second;
        const std::size_t k = formulas_.size();
        index_.emplace(std::move(key), k);
        formulas_.push_back(f);
        return k;
    }

    StructureGraph emit(std::size_t root) const {
        // reachable from the initial formula or from any bound variable
        std::vector<bool> keep(formulas_.size(), false);
        std::vector<std::size_t> stack{root};
        for (const auto &eq : e_) stack.push_back(index_.at(eq.lhs));
        for (std::size_t u : stack) keep[u] = true;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v : succ_[u])
                if (!keep[v]) {
                    keep[v] = true;
                    stack.push_back(v);
                }
        }
        std::vector<std::size_t> order;
        for (std::size_t u = 0; u < formulas_.size(); ++u)
            if (keep[u]) order.push_back(u);
        std::vector<std::string> labels(formulas_.size());
        for (std::size_t u : order) labels[u] = to_string(formulas_[u]);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return LabelOrder{}(labels[a], labels[b]); });
        std::vector<std::size_t> position(formulas_.size(), 0);
        std::vector<GraphNode> nodes;
        for (std::size_t i = 0; i < order.size(); ++i) {
            position[order[i]] = i;
            nodes.push_back(GraphNode{sequential_id(i, order.size()), labels[order[i]], decoration(formulas_[order[i]])});
        }
        std::vector<StructureGraph::Edge> edges;
        for (std::size_t u : order)
            for (std::size_t v : succ_[u]) edges.emplace_back(position[u], position[v]);
        return StructureGraph(std::move(nodes), edges, position[root]);
    }

    const EquationSystem &e_;
    PremiseReading reading_;
    std::map<std::string, unsigned> rank_;
    std::set<std::string> var_and_, var_or_;
    std::map<std::string, std::vector<Formula>> literal_succ_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<Formula> formulas_;
    std::vector<std::vector<std::size_t>> succ_;
};

} // namespace detail

/// Structure graph of `t` in the context of a closed, non-empty system in
/// general syntax. Constants are decorated top/bot, connectives and/or, bound
/// variables carry their rank; nested occurrences of the same connective are
/// flattened into one node. The graph holds every node reachable from `t`
/// or from a bound variable.
inline StructureGraph build_graph(const EquationSystem &e, const Formula &t,
                                  PremiseReading reading = PremiseReading::syntactic) {
    return detail::GraphConstruction(e, reading).build(t);
}

/// Graph of the least bound variable.
inline StructureGraph build_graph(const EquationSystem &e) {
    require_nonempty(e);
    return build_graph(e, Formula::variable(e[0].lhs));
}

/// Structure graph of an SRF formula `t` in the context of a closed,
/// non-empty SRF system: one node per bound variable, plus `t` itself when
/// it is a set connective.
inline StructureGraph build_srf_graph(const EquationSystem &e, const Formula &t) {
    require_nonempty(e);
    require_closed(e);
    if (!is_srf(e)) throw PreconditionError("system is not in standard recursive form");
    if (!is_srf_syntax(t)) throw PreconditionError("initial formula is not an SRF formula: " + to_string(t));
    for (const auto &x : occ(t))
        if (!e.binds(x)) throw PreconditionError("formula mentions unbound variable " + x);

    const auto r = ranks(e);
    std::vector<std::string> labels;
    for (const auto &eq : e) labels.push_back(eq.lhs);
    if (t.is_set()) labels.push_back(to_string(t));
    std::sort(labels.begin(), labels.end(), LabelOrder{});
    std::map<std::string, std::size_t> at;
    for (std::size_t i = 0; i < labels.size(); ++i) at[labels[i]] = i;

    std::vector<GraphNode> nodes(labels.size());
    std::vector<StructureGraph::Edge> edges;
    auto op_of = [](const Formula &f) {
        if (f.kind() == Formula::Kind::and_set) return Op::and_sym;
        if (f.kind() == Formula::Kind::or_set) return Op::or_sym;
        return Op::none;
    };
    for (std::size_t i = 0; i < e.size(); ++i) {
        const std::size_t u = at.at(e[i].lhs);
        nodes[u] = GraphNode{sequential_id(u, labels.size()), e[i].lhs, Decoration{op_of(e[i].rhs), {r[i]}}};
        for (const auto &y : occ(e[i].rhs)) edges.emplace_back(u, at.at(y));
    }
    if (t.is_set()) {
        const std::size_t u = at.at(to_string(t));
        nodes[u] = GraphNode{sequential_id(u, labels.size()), labels[u], Decoration{op_of(t), {}}};
        for (const auto &y : t.members()) edges.emplace_back(u, at.at(y));
    }
    return StructureGraph(std::move(nodes), edges, at.at(to_string(t)));
}

/// Replaces every true node by a rank-0 self-loop and every false node by a
/// rank-1 self-loop; all other nodes are copied.
inline StructureGraph reduce(const StructureGraph &g) {
    std::vector<GraphNode> nodes = g.nodes();
    std::vector<StructureGraph::Edge> edges;
    for (std::size_t u = 0; u < g.size(); ++u) {
        GraphNode &n = nodes[u];
        if (n.deco.is_constant()) {
            n.deco = Decoration{Op::none, {n.deco.op == Op::top ? 0u : 1u}};
            edges.emplace_back(u, u);
        } else {
            for (std::size_t v : g.successors(u)) edges.emplace_back(u, v);
        }
    }
    return StructureGraph(std::move(nodes), edges, g.init());
}

/// Gives every unranked node the maximal rank among its (normalised)
/// successors. Expects a reduced graph in which every cycle is ranked.
inline StructureGraph normalise(const StructureGraph &g) {
    std::vector<GraphNode> nodes = g.nodes();
    for (std::size_t u = 0; u < g.size(); ++u)
        if (nodes[u].deco.is_constant())
            throw PreconditionError("normalise expects a reduced graph; node " + nodes[u].id + " is a constant");
    // 0 unvisited, 1 in progress, 2 ranked
    std::vector<int> state(g.size(), 0);
    std::vector<std::size_t> path;
    for (std::size_t u = 0; u < g.size(); ++u)
        if (nodes[u].deco.ranked()) state[u] = 2;

    auto visit = [&](auto &&self, std::size_t u) -> unsigned {
        if (state[u] == 2) return *nodes[u].deco.max_rank();
        if (state[u] == 1) {
            std::string cycle;
            auto from = std::find(path.begin(), path.end(), u);
            for (auto it = from; it != path.end(); ++it) cycle += nodes[*it].id + " -> ";
            throw PreconditionError("cycle of unranked nodes: " + cycle + nodes[u].id);
        }
        if (g.successors(u).empty())
            throw PreconditionError("unranked node " + nodes[u].id + " has no successor to take a rank from");
        state[u] = 1;
        path.push_back(u);
        unsigned best = 0;
        for (std::size_t v : g.successors(u)) best = std::max(best, self(self, v));
        path.pop_back();
        nodes[u].deco.ranks.insert(best);
        state[u] = 2;
        return best;
    };
    for (std::size_t u = 0; u < g.size(); ++u) visit(visit, u);
    return StructureGraph(std::move(nodes), g.edges(), g.init());
}

struct NormalisedBes {
    EquationSystem system;
    /// original bound variable -> its variable in `system`
    std::map<std::string, std::string> image;
};

/// Translation of the reduced, normalised structure graph of `e`. Every
/// right-hand side uses at most one kind of connective.
inline NormalisedBes normalised_bes(const EquationSystem &e) {
    const StructureGraph g = normalise(reduce(build_graph(e)));
    BackTranslation bt = graph_to_bes(g);
    NormalisedBes out{std::move(bt.system), {}};
    for (const auto &eq : e) out.image[eq.lhs] = *bt.variable_of[*g.find_label(eq.lhs)];
    return out;
}

/// Decides bisimilarity of `f` w.r.t. the graph of `e` and `f2` w.r.t. the
/// graph of `e2`.
inline std::optional<BisimWitness> bisimilar_in_context(const EquationSystem &e, const Formula &f,
                                                        const EquationSystem &e2, const Formula &f2) {
    return bisimilar(build_graph(e, f), build_graph(e2, f2));
}

} // namespace besgraph
