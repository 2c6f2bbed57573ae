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
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "besgraph/error.hpp"

namespace besgraph {

enum class Op { none, and_sym, or_sym, top, bot };

inline const char *to_string(Op op) {
    switch (op) {
    case Op::none: return "none";
    case Op::and_sym: return "and";
    case Op::or_sym: return "or";
    case Op::top: return "top";
    case Op::bot: return "bot";
    }
    return "none";
}

/// Operator symbol plus rank set of a node. Two nodes carry the same label
/// for bisimulation iff both components agree.
struct Decoration {
    Op op = Op::none;
    std::set<unsigned> ranks;

    bool ranked() const { return !ranks.empty(); }
    std::optional<unsigned> max_rank() const {
        if (ranks.empty()) return std::nullopt;
        return *ranks.rbegin();
    }
    bool is_constant() const { return op == Op::top || op == Op::bot; }

    friend bool operator==(const Decoration &a, const Decoration &b) { return a.op == b.op && a.ranks == b.ranks; }
    friend bool operator!=(const Decoration &a, const Decoration &b) { return !(a == b); }
    friend bool operator<(const Decoration &a, const Decoration &b) {
        if (a.op != b.op) return a.op < b.op;
        return a.ranks < b.ranks;
    }
};

struct GraphNode {
    std::string id;
    std::string label;
    Decoration deco;

    friend bool operator==(const GraphNode &a, const GraphNode &b) {
        return a.id == b.id && a.label == b.label && a.deco == b.deco;
    }
};

/// Finite node-decorated graph with an initial node. Nodes are kept sorted
/// by id and successor lists sorted and free of duplicates, so two graphs
/// with the same content compare equal.
class StructureGraph {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    StructureGraph() = default;

    /// Edges and `init` index into `nodes` as given.
    StructureGraph(std::vector<GraphNode> nodes, const std::vector<Edge> &edges, std::size_t init) {
        if (nodes.empty()) throw ValidationError("structure graph without nodes");
        if (init >= nodes.size()) throw ValidationError("initial node out of range");
        std::vector<std::size_t> order(nodes.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return nodes[a].id < nodes[b].id; });
        std::vector<std::size_t> position(nodes.size());
        for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
        for (std::size_t i = 0; i < order.size(); ++i) {
            GraphNode &n = nodes[order[i]];
            if (n.id.empty() || n.id.find_first_of(" \t\r\n\"") != std::string::npos)
                throw ValidationError("invalid node id '" + n.id + "'");
            if (i && nodes_.back().id == n.id) throw ValidationError("duplicate node id " + n.id);
            nodes_.push_back(std::move(n));
        }
        succ_.assign(nodes_.size(), {});
        for (auto [s, d] : edges) {
            if (s >= nodes_.size() || d >= nodes_.size()) throw ValidationError("edge endpoint out of range");
            succ_[position[s]].push_back(position[d]);
        }
        for (auto &s : succ_) {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
        }
        init_ = position[init];
    }

    /// Edges and `init` given by node id.
    static StructureGraph from_ids(std::vector<GraphNode> nodes,
                                   const std::vector<std::pair<std::string, std::string>> &edges,
                                   const std::string &init) {
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (!index.emplace(nodes[i].id, i).second) throw ValidationError("duplicate node id " + nodes[i].id);
        auto lookup = [&](const std::string &id) {
            auto it = index.find(id);
            if (it == index.end()) throw ValidationError("unknown node id " + id);
            return it->second;
        };
        std::vector<Edge> e;
        for (const auto &[s, d] : edges) e.emplace_back(lookup(s), lookup(d));
        const std::size_t i = lookup(init);
        return StructureGraph(std::move(nodes), e, i);
    }

    std::size_t size() const { return nodes_.size(); }
    std::size_t init() const { return init_; }
    const GraphNode &node(std::size_t i) const { return nodes_[i]; }
    const std::vector<GraphNode> &nodes() const { return nodes_; }
    const Decoration &deco(std::size_t i) const { return nodes_[i].deco; }
    const std::vector<std::size_t> &successors(std::size_t i) const { return succ_[i]; }

    std::size_t edge_count() const {
        std::size_t n = 0;
        for (const auto &s : succ_) n += s.size();
        return n;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (std::size_t i = 0; i < succ_.size(); ++i)
            for (std::size_t j : succ_[i]) out.emplace_back(i, j);
        return out;
    }

    std::optional<std::size_t> find(const std::string &id) const {
        auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id,
                                   [](const GraphNode &n, const std::string &k) { return n.id < k; });
        if (it == nodes_.end() || it->id != id) return std::nullopt;
        return static_cast<std::size_t>(it - nodes_.begin());
    }

    std::optional<std::size_t> find_label(const std::string &label) const {
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            if (nodes_[i].label == label) return i;
        return std::nullopt;
    }

    /// The same graph with another initial node.
    StructureGraph with_init(std::size_t init) const {
        if (init >= nodes_.size()) throw ValidationError("initial node out of range");
        StructureGraph out = *this;
        out.init_ = init;
        return out;
    }

    /// Nodes reachable from the initial node.
    std::vector<bool> reachable() const {
        std::vector<bool> seen(nodes_.size(), false);
        std::vector<std::size_t> stack{init_};
        seen[init_] = true;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v : succ_[u])
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
        return seen;
    }

    /// Subgraph induced by the nodes reachable from the initial node.
    StructureGraph reachable_part() const {
        const auto keep = reachable();
        std::vector<GraphNode> nodes;
        std::vector<std::size_t> index(nodes_.size(), 0);
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            if (keep[i]) {
                index[i] = nodes.size();
                nodes.push_back(nodes_[i]);
            }
        std::vector<Edge> e;
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            if (keep[i])
                for (std::size_t j : succ_[i]) e.emplace_back(index[i], index[j]);
        return StructureGraph(std::move(nodes), e, index[init_]);
    }

    friend bool operator==(const StructureGraph &a, const StructureGraph &b) {
        return a.init_ == b.init_ && a.nodes_ == b.nodes_ && a.succ_ == b.succ_;
    }

private:
    std::vector<GraphNode> nodes_;
    std::vector<std::vector<std::size_t>> succ_;
    std::size_t init_ = 0;
};

struct BessyViolation {
    int constraint; // 1..5
    std::string node;
    std::string message;
};

/// Checks the five constraints under which a structure graph translates back
/// into an equation system:
///  1. a true/false node has no successor;
///  2. a node is decorated by an operator or a rank iff it has a successor;
///  3. a node with several successors carries an operator;
///  4. some node has rank 0 or 1 and the ranks in the graph form an interval;
///  5. every cycle passes through a ranked node.
/// Constraint 4 ranges over all nodes of the graph and holds vacuously when
/// no node is ranked.
inline std::vector<BessyViolation> is_bessy(const StructureGraph &g) {
    std::vector<BessyViolation> out;
    std::set<unsigned> all_ranks;
    for (std::size_t u = 0; u < g.size(); ++u) {
        const Decoration &d = g.deco(u);
        const auto &s = g.successors(u);
        const std::string &id = g.node(u).id;
        all_ranks.insert(d.ranks.begin(), d.ranks.end());
        if (d.is_constant() && !s.empty()) out.push_back({1, id, "constant node has successors"});
        const bool marked = d.op == Op::and_sym || d.op == Op::or_sym || d.ranked();
        if (marked && s.empty()) out.push_back({2, id, "decorated node has no successor"});
        if (!marked && !s.empty()) out.push_back({2, id, "node with successors carries neither operator nor rank"});
        if (s.size() > 1 && d.op != Op::and_sym && d.op != Op::or_sym)
            out.push_back({3, id, "node with several successors carries no operator"});
    }
    if (!all_ranks.empty()) {
        const unsigned lo = *all_ranks.begin(), hi = *all_ranks.rbegin();
        if (lo > 1) out.push_back({4, g.node(g.init()).id, "no node has rank 0 or 1"});
        if (all_ranks.size() != hi - lo + 1) out.push_back({4, g.node(g.init()).id, "ranks do not form an interval"});
    }
    // colours: 0 unvisited, 1 on stack, 2 done; only unranked nodes are walked
    std::vector<int> colour(g.size(), 0);
    std::vector<bool> reported(g.size(), false);
    for (std::size_t root = 0; root < g.size(); ++root) {
        if (colour[root] || g.deco(root).ranked()) continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        colour[root] = 1;
        while (!stack.empty()) {
            auto &[u, next] = stack.back();
            if (next == g.successors(u).size()) {
                colour[u] = 2;
                stack.pop_back();
                continue;
            }
            const std::size_t v = g.successors(u)[next++];
            if (g.deco(v).ranked()) continue;
            if (colour[v] == 1 && !reported[v]) {
                reported[v] = true;
                out.push_back({5, g.node(v).id, "cycle through unranked nodes"});
            } else if (colour[v] == 0) {
                colour[v] = 1;
                stack.emplace_back(v, 0);
            }
        }
    }
    return out;
}

inline void require_bessy(const StructureGraph &g) {
    const auto v = is_bessy(g);
    if (!v.empty())
        throw PreconditionError("graph is not BESsy: constraint " + std::to_string(v.front().constraint) +
                                " at node " + v.front().node + ": " + v.front().message);
}

} // namespace besgraph
