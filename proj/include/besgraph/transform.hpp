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

#include "besgraph/bes.hpp"
#include "besgraph/error.hpp"
#include "besgraph/formula.hpp"

namespace besgraph {

/// Hands out identifiers that do not clash with a given set of names.
class FreshNames {
public:
    explicit FreshNames(std::set<std::string> used) : used_(std::move(used)) {}

    /// `base'1`, `base'2`, ... skipping names already taken.
    std::string derived(const std::string &base) {
        std::size_t &k = counters_[base];
        std::string candidate;
        do candidate = base + "'" + std::to_string(++k);
        while (used_.count(candidate));
        used_.insert(candidate);
        return candidate;
    }

    /// `base` itself if free, otherwise a derived name.
    std::string exact_or_derived(const std::string &base) {
        if (used_.insert(base).second) return base;
        return derived(base);
    }

private:
    std::set<std::string> used_;
    std::map<std::string, std::size_t> counters_;
};

namespace detail {

class SrfConverter {
public:
    explicit SrfConverter(const EquationSystem &e) : names_(bnd(e)) {}

    EquationSystem run(const EquationSystem &e) {
        std::vector<Equation> out;
        for (const auto &eq : e) {
            std::vector<Equation> extra;
            Formula rhs = convert(eq.rhs, eq, extra);
            out.push_back(Equation{eq.sign, eq.lhs, std::move(rhs)});
            out.insert(out.end(), extra.begin(), extra.end());
        }
        // nu T = T is true and mu F = F is false wherever they are placed
        if (true_name_) out.push_back(Equation{Fixpoint::nu, *true_name_, Formula::variable(*true_name_)});
        if (false_name_) out.push_back(Equation{Fixpoint::mu, *false_name_, Formula::variable(*false_name_)});
        return EquationSystem(std::move(out));
    }

private:
    std::string constant_name(bool value) {
        auto &slot = value ? true_name_ : false_name_;
        if (!slot) slot = names_.exact_or_derived(value ? "TRUE" : "FALSE");
        return *slot;
    }

    // Right-hand side in SRF for `f`; subterms headed by the other connective
    // get fresh equations with the host's sign, placed right after the host.
    Formula convert(const Formula &f, const Equation &host, std::vector<Equation> &extra) {
        if (f.is_variable() || f.is_set()) return f;
        if (f.is_constant()) return Formula::variable(constant_name(f.value()));
        const bool conj = f.is_and_like();
        std::vector<std::string> members;
        flatten(f, conj, host, extra, members);
        return conj ? Formula::and_set(std::move(members)) : Formula::or_set(std::move(members));
    }

    void flatten(const Formula &f, bool conj, const Equation &host, std::vector<Equation> &extra,
                 std::vector<std::string> &members) {
        const bool same = conj ? f.is_and_like() : f.is_or_like();
        if (f.is_binary() && same) {
            flatten(f.left(), conj, host, extra, members);
            flatten(f.right(), conj, host, extra, members);
        } else if (f.is_set() && same) {
            members.insert(members.end(), f.members().begin(), f.members().end());
        } else if (f.is_variable()) {
            members.push_back(f.name());
        } else if (f.is_constant()) {
            members.push_back(constant_name(f.value()));
        } else {
            std::string fresh = names_.derived(host.lhs);
            std::vector<Equation> nested;
            Formula rhs = convert(f, host, nested);
            extra.push_back(Equation{host.sign, fresh, std::move(rhs)});
            extra.insert(extra.end(), nested.begin(), nested.end());
            members.push_back(std::move(fresh));
        }
    }

    FreshNames names_;
    std::optional<std::string> true_name_, false_name_;
};

inline Formula hbar_formula(const Formula &f) {
    if (f.is_variable()) return f;
    if (!f.is_set()) throw PreconditionError("not an SRF right-hand side: " + to_string(f));
    const bool conj = f.kind() == Formula::Kind::and_set;
    auto join = [conj](Formula a, Formula b) { return conj ? Formula::conj(a, b) : Formula::disj(a, b); };
    // members are stored in ascending order, so the minimum comes first
    const auto &m = f.members();
    Formula acc = join(Formula::variable(m.back()), Formula::variable(m.back()));
    for (std::size_t i = m.size() - 1; i-- > 0;) acc = join(Formula::variable(m[i]), acc);
    return acc;
}

} // namespace detail

/// Standard recursive form: every right-hand side becomes a variable or a
/// single n-ary connective over variables. Bound variables of the input keep
/// their solution.
inline EquationSystem to_srf(const EquationSystem &e) {
    require_nonempty(e);
    require_closed(e);
    return detail::SrfConverter(e).run(e);
}

/// Embedding of SRF right-hand sides into binary syntax:
/// AND{X} becomes X && X and AND{X, Y, ...} becomes X && hbar(AND{Y, ...}).
inline Formula hbar(const Formula &f) { return detail::hbar_formula(f); }

inline EquationSystem hbar(const EquationSystem &e) {
    if (!is_srf(e)) throw PreconditionError("hbar expects a system in standard recursive form");
    std::vector<Equation> out;
    for (const auto &eq : e) out.push_back(Equation{eq.sign, eq.lhs, hbar(eq.rhs)});
    return EquationSystem(std::move(out));
}

/// Moves the equation at `from` to position `to`, optionally changing its
/// sign. Allowed only if its right-hand side mentions no variable bound
/// after the earlier of the two positions; a sign change further needs the
/// equation not to mention its own variable.
inline EquationSystem move_equation(const EquationSystem &e, std::size_t from, std::size_t to,
                                    Fixpoint new_sign) {
    if (from >= e.size() || to >= e.size()) throw PreconditionError("equation index out of range");
    const Equation &moved = e[from];
    if (from == to && new_sign == moved.sign) return e;
    const std::set<std::string> mentioned = occ(moved.rhs);
    const std::size_t first = std::min(from, to);
    for (std::size_t i = first; i < e.size(); ++i) {
        if (i == from) continue;
        if (mentioned.count(e[i].lhs))
            throw PreconditionError("cannot move equation for " + moved.lhs + ": its right-hand side mentions " +
                                    e[i].lhs + ", bound at or after the target position");
    }
    if (new_sign != moved.sign && mentioned.count(moved.lhs))
        throw PreconditionError("cannot change the sign of " + moved.lhs + ": it occurs in its own right-hand side");

    std::vector<Equation> out = e.equations();
    Equation eq = out[from];
    eq.sign = new_sign;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(from));
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(to), std::move(eq));
    return EquationSystem(std::move(out));
}

/// Exchanges two equations of equal rank.
inline EquationSystem swap_equations(const EquationSystem &e, std::size_t i, std::size_t j) {
    if (i >= e.size() || j >= e.size()) throw PreconditionError("equation index out of range");
    if (i == j) return e;
    const unsigned ri = rank(e, e[i].lhs), rj = rank(e, e[j].lhs);
    if (ri != rj)
        throw PreconditionError("cannot swap " + e[i].lhs + " (rank " + std::to_string(ri) + ") with " + e[j].lhs +
                                " (rank " + std::to_string(rj) + ")");
    std::vector<Equation> out = e.equations();
    std::swap(out[i], out[j]);
    return EquationSystem(std::move(out));
}

} // namespace besgraph
