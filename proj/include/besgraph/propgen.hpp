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
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "besgraph/bes.hpp"
#include "besgraph/error.hpp"
#include "besgraph/formula.hpp"
#include "besgraph/sgraph.hpp"

namespace besgraph {

struct GenConfig {
    std::size_t variable_count = 4;
    std::size_t max_rhs_depth = 3;
    double constant_probability = 0.1;
    /// probability that a connective is a conjunction
    double operator_bias = 0.5;
    std::uint64_t seed = 0;

    void validate() const {
        if (variable_count < 1) throw PreconditionError("variable_count must be at least 1");
        if (max_rhs_depth < 1) throw PreconditionError("max_rhs_depth must be at least 1");
        if (!(constant_probability >= 0 && constant_probability <= 1) || !(operator_bias >= 0 && operator_bias <= 1))
            throw PreconditionError("probabilities must lie in [0, 1]");
    }
};

/// Counter-based random stream. Each draw hashes (key, counter), and split()
/// derives an independent stream from a tag, so sub-generators do not depend
/// on how many values their siblings consumed.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t key) : key_(mix(key)) {}

    RandomStream split(std::uint64_t tag) const { return RandomStream(key_ ^ mix(tag + 0x632be59bd9b4e019ULL)); }

    std::uint64_t next() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return uniform() < p; }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

private:
    // splitmix64 finaliser
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

inline std::string generated_variable(std::size_t i) { return "X" + std::to_string(i + 1); }

namespace detail {

inline Formula random_formula(RandomStream &s, const GenConfig &cfg, std::size_t depth) {
    if (depth <= 1 || s.chance(0.3)) {
        if (s.chance(cfg.constant_probability)) return Formula::constant(s.chance(0.5));
        return Formula::variable(generated_variable(s.below(cfg.variable_count)));
    }
    Formula l = random_formula(s, cfg, depth - 1);
    Formula r = random_formula(s, cfg, depth - 1);
    return s.chance(cfg.operator_bias) ? Formula::conj(l, r) : Formula::disj(l, r);
}

} // namespace detail

/// Random closed system over X1..Xn with general-syntax right-hand sides.
inline EquationSystem gen_bes(const GenConfig &cfg) {
    cfg.validate();
    const RandomStream root(cfg.seed);
    std::vector<Equation> out;
    for (std::size_t i = 0; i < cfg.variable_count; ++i) {
        RandomStream s = root.split(i);
        const Fixpoint sign = s.chance(0.5) ? Fixpoint::mu : Fixpoint::nu;
        out.push_back(Equation{sign, generated_variable(i), detail::random_formula(s, cfg, cfg.max_rhs_depth)});
    }
    return EquationSystem(std::move(out));
}

/// Random closed system in standard recursive form.
inline EquationSystem gen_srf_bes(const GenConfig &cfg) {
    cfg.validate();
    const RandomStream root(cfg.seed ^ 0x5352465f42455331ULL);
    std::vector<Equation> out;
    for (std::size_t i = 0; i < cfg.variable_count; ++i) {
        RandomStream s = root.split(i);
        const Fixpoint sign = s.chance(0.5) ? Fixpoint::mu : Fixpoint::nu;
        const std::size_t shape = s.below(3);
        Formula rhs;
        if (shape == 0) {
            rhs = Formula::variable(generated_variable(s.below(cfg.variable_count)));
        } else {
            std::vector<std::string> members;
            const std::size_t k = 1 + s.below(std::min<std::size_t>(cfg.variable_count, 3));
            for (std::size_t j = 0; j < k; ++j) members.push_back(generated_variable(s.below(cfg.variable_count)));
            rhs = shape == 1 ? Formula::and_set(std::move(members)) : Formula::or_set(std::move(members));
        }
        out.push_back(Equation{sign, generated_variable(i), std::move(rhs)});
    }
    return EquationSystem(std::move(out));
}

/// Random general formula over the variables of gen_bes(cfg).
inline Formula gen_formula(const GenConfig &cfg, std::uint64_t tag) {
    cfg.validate();
    RandomStream s = RandomStream(cfg.seed).split(0xf0f0f0f0ULL + tag);
    return detail::random_formula(s, cfg, cfg.max_rhs_depth);
}

/// Random structure graph with `variable_count` nodes; not necessarily
/// BESsy.
inline StructureGraph gen_graph(const GenConfig &cfg) {
    cfg.validate();
    RandomStream s = RandomStream(cfg.seed).split(0x6772617068ULL);
    const std::size_t n = cfg.variable_count;
    std::vector<GraphNode> nodes;
    std::vector<StructureGraph::Edge> edges;
    const Op ops[] = {Op::none, Op::and_sym, Op::or_sym};
    for (std::size_t i = 0; i < n; ++i) {
        Decoration d{ops[s.below(3)], {}};
        if (s.chance(0.6)) d.ranks.insert(static_cast<unsigned>(s.below(3)));
        nodes.push_back(GraphNode{"n" + std::to_string(i), "u" + std::to_string(i), d});
        const std::size_t out_degree = s.below(4);
        for (std::size_t k = 0; k < out_degree; ++k) edges.emplace_back(i, s.below(n));
    }
    return StructureGraph(std::move(nodes), edges, 0);
}

namespace detail {

inline Formula rebind(const Formula &f, const std::set<std::string> &gone, const std::string &to) {
    switch (f.kind()) {
    case Formula::Kind::constant: return f;
    case Formula::Kind::variable: return gone.count(f.name()) ? Formula::variable(to) : f;
    case Formula::Kind::conjunction: return Formula::conj(rebind(f.left(), gone, to), rebind(f.right(), gone, to));
    case Formula::Kind::disjunction: return Formula::disj(rebind(f.left(), gone, to), rebind(f.right(), gone, to));
    case Formula::Kind::and_set:
    case Formula::Kind::or_set: {
        std::vector<std::string> m;
        for (const auto &x : f.members()) m.push_back(gone.count(x) ? to : x);
        return f.kind() == Formula::Kind::and_set ? Formula::and_set(std::move(m)) : Formula::or_set(std::move(m));
    }
    }
    return f;
}

} // namespace detail

/// Smaller variants of `e`: trailing equations dropped, occurrences of the
/// dropped variables rebound to the first variable. Largest reduction first.
inline std::vector<EquationSystem> shrink_candidates(const EquationSystem &e) {
    std::vector<EquationSystem> out;
    if (e.size() <= 1) return out;
    for (std::size_t keep = 1; keep < e.size(); keep = keep * 2 >= e.size() ? e.size() : keep * 2) {
        std::set<std::string> gone;
        for (std::size_t i = keep; i < e.size(); ++i) gone.insert(e[i].lhs);
        std::vector<Equation> eqs;
        for (std::size_t i = 0; i < keep; ++i)
            eqs.push_back(Equation{e[i].sign, e[i].lhs, detail::rebind(e[i].rhs, gone, e[0].lhs)});
        out.emplace_back(std::move(eqs));
    }
    if (out.empty() || out.back().size() != e.size() - 1) {
        std::set<std::string> gone{e[e.size() - 1].lhs};
        std::vector<Equation> eqs;
        for (std::size_t i = 0; i + 1 < e.size(); ++i)
            eqs.push_back(Equation{e[i].sign, e[i].lhs, detail::rebind(e[i].rhs, gone, e[0].lhs)});
        out.emplace_back(std::move(eqs));
    }
    return out;
}

/// Greedily shrinks a failing input while `fails` keeps returning true.
inline EquationSystem shrink_failure(EquationSystem e, const std::function<bool(const EquationSystem &)> &fails) {
    for (bool progress = true; progress;) {
        progress = false;
        for (auto &candidate : shrink_candidates(e)) {
            if (fails(candidate)) {
                e = std::move(candidate);
                progress = true;
                break;
            }
        }
    }
    return e;
}

} // namespace besgraph
