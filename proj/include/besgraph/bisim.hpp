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
#include <utility>
#include <vector>

#include "besgraph/formula.hpp"
#include "besgraph/sgraph.hpp"

namespace besgraph {

/// Blocks of nodes; `block_of[u]` indexes `blocks`.
struct Partition {
    std::vector<std::size_t> block_of;
    std::vector<std::vector<std::size_t>> blocks;

    std::size_t block_count() const { return blocks.size(); }
};

namespace detail {

// Signature refinement: start from the decoration classes and split by the
// set of successor blocks until the number of blocks is stable. The result
// is the coarsest decoration-respecting bisimulation. Block numbers are
// arbitrary but deterministic.
inline std::vector<std::size_t> refine(const std::vector<const Decoration *> &deco,
                                       const std::vector<const std::vector<std::size_t> *> &succ) {
    const std::size_t n = deco.size();
    std::vector<std::size_t> block(n);
    std::size_t count = 0;
    {
        std::map<Decoration, std::size_t> ids;
        for (std::size_t u = 0; u < n; ++u) {
            auto [it, fresh] = ids.emplace(*deco[u], ids.size());
            block[u] = it->second;
        }
        count = ids.size();
    }
    for (;;) {
        std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> ids;
        std::vector<std::size_t> next(n);
        for (std::size_t u = 0; u < n; ++u) {
            std::vector<std::size_t> sig;
            sig.reserve(succ[u]->size());
            for (std::size_t v : *succ[u]) sig.push_back(block[v]);
            std::sort(sig.begin(), sig.end());
            sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
            auto [it, fresh] = ids.emplace(std::make_pair(block[u], std::move(sig)), ids.size());
            next[u] = it->second;
        }
        block = std::move(next);
        if (ids.size() == count) break;
        count = ids.size();
    }
    return block;
}

} // namespace detail

/// Coarsest bisimulation on all nodes of `g`. Blocks are numbered by their
/// least member label (ties by node order).
inline Partition bisimulation_partition(const StructureGraph &g) {
    std::vector<const Decoration *> deco;
    std::vector<const std::vector<std::size_t> *> succ;
    for (std::size_t u = 0; u < g.size(); ++u) {
        deco.push_back(&g.deco(u));
        succ.push_back(&g.successors(u));
    }
    const auto raw = detail::refine(deco, succ);
    std::map<std::size_t, std::vector<std::size_t>> grouped;
    for (std::size_t u = 0; u < g.size(); ++u) grouped[raw[u]].push_back(u);

    std::vector<std::vector<std::size_t>> blocks;
    for (auto &[id, members] : grouped) {
        std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
            const auto &la = g.node(a).label, &lb = g.node(b).label;
            if (LabelOrder{}(la, lb)) return true;
            if (LabelOrder{}(lb, la)) return false;
            return a < b;
        });
        blocks.push_back(std::move(members));
    }
    std::sort(blocks.begin(), blocks.end(), [&](const auto &a, const auto &b) {
        const auto &la = g.node(a.front()).label, &lb = g.node(b.front()).label;
        if (LabelOrder{}(la, lb)) return true;
        if (LabelOrder{}(lb, la)) return false;
        return a.front() < b.front();
    });
    Partition p;
    p.block_of.assign(g.size(), 0);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (std::size_t u : blocks[b]) p.block_of[u] = b;
    p.blocks = std::move(blocks);
    return p;
}

/// Ids "n0", "n1", ... zero-padded so that string order equals index order.
inline std::string sequential_id(std::size_t index, std::size_t count) {
    std::string digits = std::to_string(index);
    const std::size_t width = std::to_string(count > 0 ? count - 1 : 0).size();
    return "n" + std::string(width - std::min(width, digits.size()), '0') + digits;
}

struct Quotient {
    StructureGraph graph;
    /// original node -> quotient node
    std::vector<std::size_t> block_of;
};

/// Quotient of `g` modulo bisimilarity. Each block becomes one node labelled
/// by its least member label.
inline Quotient minimize(const StructureGraph &g) {
    const Partition p = bisimulation_partition(g);
    std::vector<GraphNode> nodes;
    for (std::size_t b = 0; b < p.block_count(); ++b) {
        const GraphNode &rep = g.node(p.blocks[b].front());
        nodes.push_back(GraphNode{sequential_id(b, p.block_count()), rep.label, rep.deco});
    }
    std::vector<StructureGraph::Edge> edges;
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v : g.successors(u)) edges.emplace_back(p.block_of[u], p.block_of[v]);
    return Quotient{StructureGraph(std::move(nodes), edges, p.block_of[g.init()]), p.block_of};
}

/// Pairs (node of G, node of H), plus whether the initial nodes are related.
struct BisimWitness {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    bool initial_related = false;
};

/// Whether `pairs` satisfies the transfer conditions of a bisimulation.
inline bool is_bisimulation(const StructureGraph &g, const StructureGraph &h,
                            const std::vector<std::pair<std::size_t, std::size_t>> &pairs) {
    const std::set<std::pair<std::size_t, std::size_t>> rel(pairs.begin(), pairs.end());
    for (auto [u, v] : rel) {
        if (u >= g.size() || v >= h.size()) return false;
        if (g.deco(u) != h.deco(v)) return false;
        for (std::size_t u2 : g.successors(u)) {
            bool matched = false;
            for (std::size_t v2 : h.successors(v)) matched = matched || rel.count({u2, v2});
            if (!matched) return false;
        }
        for (std::size_t v2 : h.successors(v)) {
            bool matched = false;
            for (std::size_t u2 : g.successors(u)) matched = matched || rel.count({u2, v2});
            if (!matched) return false;
        }
    }
    return true;
}

/// Largest bisimulation between the parts of `g` and `h` reachable from
/// their initial nodes, decided on the disjoint union. Present iff it
/// relates the initial nodes. Indices in the witness refer to `g` and `h`.
inline std::optional<BisimWitness> bisimilar(const StructureGraph &g, const StructureGraph &h) {
    const auto rg = g.reachable(), rh = h.reachable();
    std::vector<std::size_t> origin;
    std::vector<bool> from_g;
    std::vector<std::size_t> local(g.size() + h.size(), 0);
    for (std::size_t u = 0; u < g.size(); ++u)
        if (rg[u]) {
            local[u] = origin.size();
            origin.push_back(u);
            from_g.push_back(true);
        }
    for (std::size_t v = 0; v < h.size(); ++v)
        if (rh[v]) {
            local[g.size() + v] = origin.size();
            origin.push_back(v);
            from_g.push_back(false);
        }
    std::vector<std::vector<std::size_t>> succ(origin.size());
    std::vector<const Decoration *> deco(origin.size());
    for (std::size_t i = 0; i < origin.size(); ++i) {
        const StructureGraph &src = from_g[i] ? g : h;
        const std::size_t offset = from_g[i] ? 0 : g.size();
        deco[i] = &src.deco(origin[i]);
        for (std::size_t w : src.successors(origin[i])) succ[i].push_back(local[offset + w]);
    }
    std::vector<const std::vector<std::size_t> *> succ_ptr;
    for (const auto &s : succ) succ_ptr.push_back(&s);
    const auto block = detail::refine(deco, succ_ptr);
    if (block[local[g.init()]] != block[local[g.size() + h.init()]]) return std::nullopt;

    BisimWitness w;
    w.initial_related = true;
    std::map<std::size_t, std::vector<std::size_t>> h_by_block;
    for (std::size_t i = 0; i < origin.size(); ++i)
        if (!from_g[i]) h_by_block[block[i]].push_back(origin[i]);
    for (std::size_t i = 0; i < origin.size(); ++i) {
        if (!from_g[i]) continue;
        auto it = h_by_block.find(block[i]);
        if (it == h_by_block.end()) continue;
        for (std::size_t v : it->second) w.pairs.emplace_back(origin[i], v);
    }
    return w;
}

/// Whether nodes `u` and `v` of one graph are bisimilar.
inline bool bisimilar_nodes(const StructureGraph &g, std::size_t u, std::size_t v) {
    return bisimilar(g.with_init(u), g.with_init(v)).has_value();
}

} // namespace besgraph
