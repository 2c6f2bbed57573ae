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
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "besgraph/error.hpp"
#include "besgraph/sgraph.hpp"

namespace besgraph {

namespace detail {

inline std::string quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    out += '"';
    return out;
}

inline std::string ranks_text(const std::set<unsigned> &ranks) {
    if (ranks.empty()) return "-";
    std::string out;
    for (unsigned r : ranks) {
        if (!out.empty()) out += ',';
        out += std::to_string(r);
    }
    return out;
}

} // namespace detail

/// Line-based exchange format "sgraph v1". Nodes and edges are listed in id
/// order, so equal graphs serialise to equal text.
inline std::string serialize(const StructureGraph &g) {
    std::string out = "sgraph v1\ninit " + g.node(g.init()).id + "\n";
    for (const auto &n : g.nodes())
        out += "node " + n.id + " op=" + to_string(n.deco.op) + " ranks=" + detail::ranks_text(n.deco.ranks) +
               " label=" + detail::quote(n.label) + "\n";
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v : g.successors(u)) out += "edge " + g.node(u).id + " " + g.node(v).id + "\n";
    return out;
}

inline StructureGraph deserialize(std::string_view text) {
    std::vector<std::string> lines;
    {
        std::size_t start = 0;
        while (start < text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            lines.emplace_back(text.substr(start, end - start));
            start = end + 1;
        }
    }
    auto fail = [](const std::string &what, std::size_t line) { throw ParseError(what, line, 1); };
    if (lines.empty() || lines[0] != "sgraph v1") fail("expected header 'sgraph v1'", 1);
    if (lines.size() < 2 || lines[1].rfind("init ", 0) != 0) fail("expected 'init <id>'", 2);
    const std::string init = lines[1].substr(5);

    std::vector<GraphNode> nodes;
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const std::string &l = lines[i];
        const std::size_t lineno = i + 1;
        if (l.empty()) continue;
        std::istringstream in(l);
        std::string kind;
        in >> kind;
        if (kind == "edge") {
            std::string s, d, extra;
            if (!(in >> s >> d) || (in >> extra)) fail("malformed edge line", lineno);
            edges.emplace_back(s, d);
        } else if (kind == "node") {
            if (!edges.empty()) fail("node listed after edges", lineno);
            std::string id, op, rk;
            if (!(in >> id >> op >> rk)) fail("malformed node line", lineno);
            GraphNode n;
            n.id = id;
            if (op == "op=none") n.deco.op = Op::none;
            else if (op == "op=and") n.deco.op = Op::and_sym;
            else if (op == "op=or") n.deco.op = Op::or_sym;
            else if (op == "op=top") n.deco.op = Op::top;
            else if (op == "op=bot") n.deco.op = Op::bot;
            else fail("unknown operator '" + op + "'", lineno);
            if (rk.rfind("ranks=", 0) != 0) fail("expected ranks=", lineno);
            const std::string list = rk.substr(6);
            if (list != "-") {
                std::size_t p = 0;
                while (p <= list.size()) {
                    std::size_t q = list.find(',', p);
                    if (q == std::string::npos) q = list.size();
                    const std::string item = list.substr(p, q - p);
                    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
                        fail("malformed rank list", lineno);
                    n.deco.ranks.insert(static_cast<unsigned>(std::stoul(item)));
                    p = q + 1;
                }
            }
            const std::string marker = " label=\"";
            const std::size_t at = l.find(marker);
            if (at == std::string::npos) fail("expected label=\"...\"", lineno);
            std::size_t k = at + marker.size();
            bool closed = false;
            for (; k < l.size(); ++k) {
                const char c = l[k];
                if (c == '\\' && k + 1 < l.size()) {
                    const char next = l[++k];
                    n.label += next == 'n' ? '\n' : next;
                } else if (c == '"') {
                    closed = true;
                    ++k;
                    break;
                } else {
                    n.label += c;
                }
            }
            if (!closed || k != l.size()) fail("malformed label", lineno);
            nodes.push_back(std::move(n));
        } else {
            fail("unknown line kind '" + kind + "'", lineno);
        }
    }
    try {
        return StructureGraph::from_ids(std::move(nodes), edges, init);
    } catch (const ValidationError &e) {
        throw ParseError(e.what(), 2, 1);
    }
}

inline const char *op_symbol(Op op) {
    switch (op) {
    case Op::and_sym: return "▲";
    case Op::or_sym: return "▽";
    case Op::top: return "⊤";
    case Op::bot: return "⊥";
    case Op::none: return "";
    }
    return "";
}

/// Graphviz rendering; the initial node has a double border.
inline std::string to_dot(const StructureGraph &g) {
    std::string out = "digraph structure_graph {\n  node [shape=box];\n";
    for (std::size_t u = 0; u < g.size(); ++u) {
        const GraphNode &n = g.node(u);
        std::string deco = op_symbol(n.deco.op);
        if (n.deco.ranked()) {
            if (!deco.empty()) deco += ' ';
            deco += detail::ranks_text(n.deco.ranks);
        }
        out += "  " + n.id + " [label=" + detail::quote(n.label + "\n" + deco);
        if (u == g.init()) out += ", peripheries=2";
        out += "];\n";
    }
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v : g.successors(u)) out += "  " + g.node(u).id + " -> " + g.node(v).id + ";\n";
    out += "}\n";
    return out;
}

} // namespace besgraph
