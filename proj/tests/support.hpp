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

#include <cstdint>
#include <cstdlib>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "besgraph/besgraph.hpp"

namespace besgraph::testing {

/// Base seed for the randomised suites; override with BESGRAPH_SEED to
/// replay a failure.
inline std::uint64_t base_seed() {
    if (const char *s = std::getenv("BESGRAPH_SEED")) return std::strtoull(s, nullptr, 0);
    return 20260114;
}

/// Number of random cases per property; BESGRAPH_CASES overrides.
inline std::size_t case_count(std::size_t fallback) {
    if (const char *s = std::getenv("BESGRAPH_CASES")) return std::strtoull(s, nullptr, 0);
    return fallback;
}

inline GenConfig random_config(std::uint64_t seed, std::size_t max_vars = 8, std::size_t max_depth = 4) {
    RandomStream s(seed);
    GenConfig cfg;
    cfg.seed = seed;
    cfg.variable_count = 1 + s.below(max_vars);
    cfg.max_rhs_depth = 1 + s.below(max_depth);
    cfg.constant_probability = 0.15 * s.uniform();
    cfg.operator_bias = 0.2 + 0.6 * s.uniform();
    return cfg;
}

/// Independent bisimilarity check: greatest fixpoint over all node pairs,
/// quadratic and slow but obviously correct.
inline bool naive_bisimilar(const StructureGraph &g, std::size_t u0, const StructureGraph &h, std::size_t v0) {
    std::set<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = 0; v < h.size(); ++v)
            if (g.deco(u) == h.deco(v)) rel.emplace(u, v);
    for (bool changed = true; changed;) {
        changed = false;
        for (auto it = rel.begin(); it != rel.end();) {
            const auto [u, v] = *it;
            bool ok = true;
            for (std::size_t a : g.successors(u)) {
                bool matched = false;
                for (std::size_t b : h.successors(v)) matched = matched || rel.count({a, b});
                ok = ok && matched;
            }
            for (std::size_t b : h.successors(v)) {
                bool matched = false;
                for (std::size_t a : g.successors(u)) matched = matched || rel.count({a, b});
                ok = ok && matched;
            }
            if (ok) {
                ++it;
            } else {
                it = rel.erase(it);
                changed = true;
            }
        }
    }
    return rel.count({u0, v0}) != 0;
}

inline bool naive_bisimilar(const StructureGraph &g, const StructureGraph &h) {
    return naive_bisimilar(g, g.init(), h, h.init());
}

inline Assignment solution(const EquationSystem &e) { return solve_gauss(e); }

} // namespace besgraph::testing
