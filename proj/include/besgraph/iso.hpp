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
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "besgraph/bes.hpp"
#include "besgraph/bisim.hpp"
#include "besgraph/error.hpp"
#include "besgraph/sgraph.hpp"

namespace besgraph {

/// Vertex/edge/rank/logic view of a closed SRF system.
struct DependencyGraph {
    /// bound variables in equation order
    std::vector<std::string> vertices;
    std::set<std::pair<std::string, std::string>> edges;
    std::map<std::string, unsigned> rank;
    /// Op::and_sym, Op::or_sym or Op::none
    std::map<std::string, Op> logic;
};

inline DependencyGraph to_dependency_graph(const EquationSystem &e) {
    require_nonempty(e);
    require_closed(e);
    if (!is_srf(e)) throw PreconditionError("dependency graphs are defined for SRF systems only");
    DependencyGraph dg;
    const auto r = ranks(e);
    for (std::size_t i = 0; i < e.size(); ++i) {
        const Equation &eq = e[i];
        dg.vertices.push_back(eq.lhs);
        dg.rank[eq.lhs] = r[i];
        dg.logic[eq.lhs] = eq.rhs.kind() == Formula::Kind::and_set  ? Op::and_sym
                           : eq.rhs.kind() == Formula::Kind::or_set ? Op::or_sym
                                                                    : Op::none;
        for (const auto &y : occ(eq.rhs)) dg.edges.emplace(eq.lhs, y);
    }
    return dg;
}

/// The dependency graph as a structure graph rooted at `init`. Node ids are
/// "v<position>" so they differ from the ids of constructed graphs.
inline StructureGraph as_structure_graph(const DependencyGraph &dg, const std::string &init) {
    std::vector<GraphNode> nodes;
    std::map<std::string, std::size_t> at;
    for (std::size_t i = 0; i < dg.vertices.size(); ++i) {
        const std::string &x = dg.vertices[i];
        at[x] = i;
        nodes.push_back(GraphNode{"v" + std::to_string(i), x, Decoration{dg.logic.at(x), {dg.rank.at(x)}}});
    }
    std::vector<StructureGraph::Edge> edges;
    for (const auto &[a, b] : dg.edges) edges.emplace_back(at.at(a), at.at(b));
    auto it = at.find(init);
    if (it == at.end()) throw PreconditionError("unknown initial vertex " + init);
    return StructureGraph(std::move(nodes), edges, it->second);
}

namespace detail {

class IsoSearch {
public:
    IsoSearch(const StructureGraph &g, const StructureGraph &h) : g_(g), h_(h) {}

    bool run() {
        const std::size_t n = g_.size();
        if (n != h_.size() || g_.edge_count() != h_.edge_count()) return false;
        colour();
        std::map<std::size_t, std::size_t> cg, ch;
        for (std::size_t u = 0; u < n; ++u) {
            ++cg[col_[u]];
            ++ch[col_[n + u]];
        }
        if (cg != ch) return false;
        pred_g_ = predecessors(g_);
        map_.assign(n, n);
        used_.assign(n, false);
        order_ = search_order();
        if (col_[g_.init()] != col_[n + h_.init()]) return false;
        return extend(0);
    }

private:
    static std::vector<std::vector<std::size_t>> predecessors(const StructureGraph &g) {
        std::vector<std::vector<std::size_t>> p(g.size());
        for (std::size_t u = 0; u < g.size(); ++u)
            for (std::size_t v : g.successors(u)) p[v].push_back(u);
        return p;
    }

    // colour refinement on the disjoint union, seeded by decoration and
    // initial-node flag, refined by successor and predecessor colour multisets
    void colour() {
        const std::size_t n = g_.size();
        std::vector<std::vector<std::size_t>> succ(2 * n), pred(2 * n);
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v : g_.successors(u)) {
                succ[u].push_back(v);
                pred[v].push_back(u);
            }
            for (std::size_t v : h_.successors(u)) {
                succ[n + u].push_back(n + v);
                pred[n + v].push_back(n + u);
            }
        }
        std::map<std::pair<Decoration, bool>, std::size_t> seed;
        col_.assign(2 * n, 0);
        for (std::size_t i = 0; i < 2 * n; ++i) {
            const bool left = i < n;
            const std::size_t u = left ? i : i - n;
            const Decoration &d = left ? g_.deco(u) : h_.deco(u);
            const bool is_init = u == (left ? g_.init() : h_.init());
            col_[i] = seed.emplace(std::make_pair(d, is_init), seed.size()).first->second;
        }
        std::size_t count = seed.size();
        for (;;) {
            using Sig = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>;
            std::map<Sig, std::size_t> ids;
            std::vector<std::size_t> next(2 * n);
            for (std::size_t i = 0; i < 2 * n; ++i) {
                std::vector<std::size_t> s, p;
                for (std::size_t v : succ[i]) s.push_back(col_[v]);
                for (std::size_t v : pred[i]) p.push_back(col_[v]);
                std::sort(s.begin(), s.end());
                std::sort(p.begin(), p.end());
                next[i] = ids.emplace(Sig{col_[i], std::move(s), std::move(p)}, ids.size()).first->second;
            }
            col_ = std::move(next);
            if (ids.size() == count) break;
            count = ids.size();
        }
    }

    // breadth-first from the initial node so neighbours are fixed early
    std::vector<std::size_t> search_order() const {
        const std::size_t n = g_.size();
        std::vector<std::size_t> order;
        std::vector<bool> seen(n, false);
        auto bfs = [&](std::size_t root) {
            std::vector<std::size_t> queue{root};
            seen[root] = true;
            for (std::size_t k = 0; k < queue.size(); ++k) {
                const std::size_t u = queue[k];
                order.push_back(u);
                for (std::size_t v : g_.successors(u))
                    if (!seen[v]) seen[v] = true, queue.push_back(v);
                for (std::size_t v : pred_g_[u])
                    if (!seen[v]) seen[v] = true, queue.push_back(v);
            }
        };
        bfs(g_.init());
        for (std::size_t u = 0; u < n; ++u)
            if (!seen[u]) bfs(u);
        return order;
    }

    bool consistent(std::size_t u, std::size_t v) const {
        const std::size_t n = g_.size();
        if (col_[u] != col_[n + v]) return false;
        if (g_.successors(u).size() != h_.successors(v).size()) return false;
        auto has = [](const std::vector<std::size_t> &s, std::size_t x) {
            return std::binary_search(s.begin(), s.end(), x);
        };
        for (std::size_t w : g_.successors(u))
            if (map_[w] != n && !has(h_.successors(v), map_[w])) return false;
        for (std::size_t w : pred_g_[u])
            if (map_[w] != n && !has(h_.successors(map_[w]), v)) return false;
        // self-loops
        if (has(g_.successors(u), u) != has(h_.successors(v), v)) return false;
        return true;
    }

    bool extend(std::size_t k) {
        const std::size_t n = g_.size();
        if (k == n) return true;
        const std::size_t u = order_[k];
        for (std::size_t v = 0; v < n; ++v) {
            if (used_[v] || !consistent(u, v)) continue;
            map_[u] = v;
            used_[v] = true;
            if (extend(k + 1)) return true;
            map_[u] = n;
            used_[v] = false;
        }
        return false;
    }

    const StructureGraph &g_, &h_;
    std::vector<std::size_t> col_;
    std::vector<std::vector<std::size_t>> pred_g_;
    std::vector<std::size_t> map_, order_;
    std::vector<bool> used_;
};

} // namespace detail

/// Whether a bijection between the nodes preserves decorations and edges in
/// both directions and maps initial node to initial node. Labels and ids are
/// ignored.
inline bool graph_isomorphic(const StructureGraph &g, const StructureGraph &h) {
    return detail::IsoSearch(g, h).run();
}

} // namespace besgraph
