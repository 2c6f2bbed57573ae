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
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "besgraph/error.hpp"
#include "besgraph/formula.hpp"

namespace besgraph {

struct Equation {
    Fixpoint sign;
    std::string lhs;
    Formula rhs;

    friend bool operator==(const Equation &a, const Equation &b) {
        return a.sign == b.sign && a.lhs == b.lhs && a.rhs == b.rhs;
    }
};

/// A well-formed Boolean equation system: an ordered sequence of equations
/// in which no variable is bound twice. The position of an equation is its
/// place in the order of bound variables.
class EquationSystem {
public:
    EquationSystem() = default;

    explicit EquationSystem(std::vector<Equation> equations) : equations_(std::move(equations)) {
        for (std::size_t i = 0; i < equations_.size(); ++i) {
            if (!index_.emplace(equations_[i].lhs, i).second)
                throw ValidationError("variable " + equations_[i].lhs + " is bound by more than one equation");
        }
    }

    const std::vector<Equation> &equations() const { return equations_; }
    std::size_t size() const { return equations_.size(); }
    bool empty() const { return equations_.empty(); }
    const Equation &operator[](std::size_t i) const { return equations_[i]; }

    auto begin() const { return equations_.begin(); }
    auto end() const { return equations_.end(); }

    bool binds(const std::string &x) const { return index_.count(x) != 0; }

    std::optional<std::size_t> index_of(const std::string &x) const {
        auto it = index_.find(x);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    const Equation &equation_for(const std::string &x) const {
        auto i = index_of(x);
        if (!i) throw PreconditionError("variable " + x + " is not bound");
        return equations_[*i];
    }

    friend bool operator==(const EquationSystem &a, const EquationSystem &b) {
        return a.equations_ == b.equations_;
    }

private:
    std::vector<Equation> equations_;
    std::map<std::string, std::size_t> index_;
};

inline std::set<std::string> bnd(const EquationSystem &e) {
    std::set<std::string> out;
    for (const auto &eq : e) out.insert(eq.lhs);
    return out;
}

inline std::set<std::string> occ(const EquationSystem &e) {
    std::set<std::string> out;
    for (const auto &eq : e) collect_occ(eq.rhs, out);
    return out;
}

inline bool is_closed(const EquationSystem &e) {
    for (const auto &eq : e)
        for (const auto &x : occ(eq.rhs))
            if (!e.binds(x)) return false;
    return true;
}

inline void require_closed(const EquationSystem &e) {
    for (const auto &eq : e)
        for (const auto &x : occ(eq.rhs))
            if (!e.binds(x)) throw PreconditionError("equation system is open: " + x + " is not bound");
}

inline void require_nonempty(const EquationSystem &e) {
    if (e.empty()) throw PreconditionError("equation system is empty");
}

/// Rank of a bound variable: the number of sign alternations, starting from
/// nu, up to and including the equation that binds `x`.
inline unsigned rank(const EquationSystem &e, const std::string &x) {
    Fixpoint current = Fixpoint::nu;
    unsigned alternations = 0;
    for (const auto &eq : e) {
        if (eq.sign != current) {
            ++alternations;
            current = eq.sign;
        }
        if (eq.lhs == x) return alternations;
    }
    throw PreconditionError("rank of unbound variable " + x);
}

/// Ranks of all bound variables, positionally aligned with the equations.
inline std::vector<unsigned> ranks(const EquationSystem &e) {
    std::vector<unsigned> out;
    out.reserve(e.size());
    Fixpoint current = Fixpoint::nu;
    unsigned alternations = 0;
    for (const auto &eq : e) {
        if (eq.sign != current) {
            ++alternations;
            current = eq.sign;
        }
        out.push_back(alternations);
    }
    return out;
}

inline unsigned alternation_hierarchy(const EquationSystem &e) {
    require_nonempty(e);
    const auto r = ranks(e);
    // ranks never decrease along the sequence
    return r.back() - r.front();
}

namespace detail {

inline void count_size(const Formula &f, std::size_t &out) {
    switch (f.kind()) {
    case Formula::Kind::constant:
    case Formula::Kind::variable: out += 1; return;
    case Formula::Kind::and_set:
    case Formula::Kind::or_set: out += 2 * f.members().size() - 1; return;
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
        out += 1;
        count_size(f.left(), out);
        count_size(f.right(), out);
        return;
    }
}

} // namespace detail

/// Leaves plus connectives of a formula; an n-ary set counts as its binary
/// expansion.
inline std::size_t size(const Formula &f) {
    std::size_t out = 0;
    detail::count_size(f, out);
    return out;
}

/// Number of equations plus the size of every right-hand side.
inline std::size_t size(const EquationSystem &e) {
    std::size_t out = e.size();
    for (const auto &eq : e) out += size(eq.rhs);
    return out;
}

inline bool is_srf(const EquationSystem &e) {
    for (const auto &eq : e)
        if (!is_srf_syntax(eq.rhs)) return false;
    return true;
}

} // namespace besgraph
