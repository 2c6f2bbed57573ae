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
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "besgraph/bes.hpp"
#include "besgraph/error.hpp"
#include "besgraph/formula.hpp"

namespace besgraph {

/// Mapping from proposition variables to truth values. Variables without an
/// explicit entry take the fallback value, if one is set.
class Environment {
public:
    Environment() = default;
    explicit Environment(std::map<std::string, bool> values, std::optional<bool> fallback = std::nullopt)
        : values_(std::move(values)), fallback_(fallback) {}

    /// The environment mapping every variable to `value`.
    static Environment constant(bool value) { return Environment({}, value); }

    bool contains(const std::string &x) const { return fallback_ || values_.count(x); }

    bool operator()(const std::string &x) const {
        auto it = values_.find(x);
        if (it != values_.end()) return it->second;
        if (fallback_) return *fallback_;
        throw PreconditionError("variable " + x + " is outside the environment");
    }

    /// eta[x := b]
    Environment updated(const std::string &x, bool b) const {
        Environment out = *this;
        out.values_[x] = b;
        return out;
    }

    void set(const std::string &x, bool b) { values_[x] = b; }

    const std::map<std::string, bool> &values() const { return values_; }
    std::optional<bool> fallback() const { return fallback_; }

private:
    std::map<std::string, bool> values_;
    std::optional<bool> fallback_;
};

/// Solution of a closed system: one truth value per bound variable.
using Assignment = std::map<std::string, bool>;

template <class Lookup>
bool eval_formula_with(const Formula &f, const Lookup &lookup) {
    switch (f.kind()) {
    case Formula::Kind::constant: return f.value();
    case Formula::Kind::variable: return lookup(f.name());
    case Formula::Kind::conjunction: return eval_formula_with(f.left(), lookup) && eval_formula_with(f.right(), lookup);
    case Formula::Kind::disjunction: return eval_formula_with(f.left(), lookup) || eval_formula_with(f.right(), lookup);
    case Formula::Kind::and_set:
        for (const auto &m : f.members())
            if (!lookup(m)) return false;
        return true;
    case Formula::Kind::or_set:
        for (const auto &m : f.members())
            if (lookup(m)) return true;
        return false;
    }
    return false;
}

inline bool eval_formula(const Formula &f, const Environment &env) {
    // evaluate every leaf so that an out-of-domain variable is always reported
    for (const auto &x : occ(f))
        if (!env.contains(x)) throw PreconditionError("variable " + x + " is outside the environment");
    return eval_formula_with(f, env);
}

inline bool eval_formula(const Formula &f, const Assignment &a) {
    return eval_formula(f, Environment(a));
}

namespace detail {

// Right-hand side compiled against variable slots; slots [0, n) are the bound
// variables in equation order, later slots are free variables.
struct CompiledFormula {
    enum class Op { constant, slot, all, any };
    Op op;
    bool value = false;
    std::size_t slot = 0;
    std::vector<CompiledFormula> children;

    bool eval(const std::vector<char> &v) const {
        switch (op) {
        case Op::constant: return value;
        case Op::slot: return v[slot] != 0;
        case Op::all:
            for (const auto &c : children)
                if (!c.eval(v)) return false;
            return true;
        case Op::any:
            for (const auto &c : children)
                if (c.eval(v)) return true;
            return false;
        }
        return false;
    }
};

class RecursiveSolver {
public:
    RecursiveSolver(const EquationSystem &e, const Environment &env) : e_(e) {
        for (std::size_t i = 0; i < e.size(); ++i) slots_.emplace(e[i].lhs, i);
        values_.assign(e.size(), 0);
        for (const auto &eq : e)
            for (const auto &x : occ(eq.rhs))
                if (!slots_.count(x)) {
                    slots_.emplace(x, values_.size());
                    values_.push_back(env(x) ? 1 : 0);
                }
        for (const auto &eq : e) rhs_.push_back(compile(eq.rhs));
    }

    std::vector<char> solve() const { return solve_from(0, values_); }

private:
    CompiledFormula compile(const Formula &f) const {
        CompiledFormula c;
        switch (f.kind()) {
        case Formula::Kind::constant:
            c.op = CompiledFormula::Op::constant;
            c.value = f.value();
            break;
        case Formula::Kind::variable:
            c.op = CompiledFormula::Op::slot;
            c.slot = slots_.at(f.name());
            break;
        case Formula::Kind::conjunction:
        case Formula::Kind::disjunction:
            c.op = f.kind() == Formula::Kind::conjunction ? CompiledFormula::Op::all : CompiledFormula::Op::any;
            c.children.push_back(compile(f.left()));
            c.children.push_back(compile(f.right()));
            break;
        case Formula::Kind::and_set:
        case Formula::Kind::or_set:
            c.op = f.kind() == Formula::Kind::and_set ? CompiledFormula::Op::all : CompiledFormula::Op::any;
            for (const auto &m : f.members()) {
                CompiledFormula leaf;
                leaf.op = CompiledFormula::Op::slot;
                leaf.slot = slots_.at(m);
                c.children.push_back(leaf);
            }
            break;
        }
        return c;
    }

    // [[(sigma X = f) E]]eta = [[E]](eta[X := [[f]]([[E]]eta[X := b]) ]) with
    // b = false for mu and true for nu.
    std::vector<char> solve_from(std::size_t k, std::vector<char> eta) const {
        if (k == e_.size()) return eta;
        std::vector<char> probe = eta;
        probe[k] = e_[k].sign == Fixpoint::nu ? 1 : 0;
        const std::vector<char> inner = solve_from(k + 1, std::move(probe));
        eta[k] = rhs_[k].eval(inner) ? 1 : 0;
        return solve_from(k + 1, std::move(eta));
    }

    const EquationSystem &e_;
    std::map<std::string, std::size_t> slots_;
    std::vector<char> values_;
    std::vector<CompiledFormula> rhs_;
};

// Substitutes `replacement` for `x` and folds constants; shared subterms are
// rewritten once.
class Substitution {
public:
    Substitution(const std::string &x, Formula replacement) : x_(x), replacement_(std::move(replacement)) {}

    Formula operator()(const Formula &f) {
        if (f.is_constant()) return f;
        if (f.is_variable()) return f.name() == x_ ? replacement_ : f;
        auto it = memo_.find(f.id());
        if (it != memo_.end()) return it->second.second;
        const Formula l = (*this)(f.left()), r = (*this)(f.right());
        Formula out = fold(f, l, r);
        // the key formula is kept alive so its address cannot be reused
        memo_.emplace(f.id(), std::make_pair(f, out));
        return out;
    }

    // c && f, f && c, c || f, f || c; nothing else
    static Formula fold(const Formula &original, const Formula &l, const Formula &r) {
        const bool conj = original.kind() == Formula::Kind::conjunction;
        if (l.is_constant()) {
            if (conj) return l.value() ? r : l;
            return l.value() ? l : r;
        }
        if (r.is_constant()) {
            if (conj) return r.value() ? l : r;
            return r.value() ? r : l;
        }
        if (l.id() == original.left().id() && r.id() == original.right().id()) return original;
        return conj ? Formula::conj(l, r) : Formula::disj(l, r);
    }

private:
    std::string x_;
    Formula replacement_;
    std::unordered_map<const void *, std::pair<Formula, Formula>> memo_;
};

class MemoEval {
public:
    explicit MemoEval(const std::map<std::string, bool> &values) : values_(values) {}

    bool operator()(const Formula &f) {
        switch (f.kind()) {
        case Formula::Kind::constant: return f.value();
        case Formula::Kind::variable: return values_.at(f.name());
        default: break;
        }
        auto it = memo_.find(f.id());
        if (it != memo_.end()) return it->second;
        const bool l = (*this)(f.left());
        const bool v = f.kind() == Formula::Kind::conjunction ? (l && (*this)(f.right())) : (l || (*this)(f.right()));
        memo_.emplace(f.id(), v);
        return v;
    }

private:
    const std::map<std::string, bool> &values_;
    std::unordered_map<const void *, bool> memo_;
};

} // namespace detail

/// The solution semantics evaluated literally, for any system and any
/// environment that covers its free variables. Exponential in the number of
/// equations.
inline Environment solve_recursive(const EquationSystem &e, const Environment &env) {
    const std::vector<char> v = detail::RecursiveSolver(e, env).solve();
    Environment out = env;
    for (std::size_t i = 0; i < e.size(); ++i) out.set(e[i].lhs, v[i] != 0);
    return out;
}

/// Restriction of solve_recursive to the bound variables of a closed system.
inline Assignment solve_oracle(const EquationSystem &e) {
    require_closed(e);
    const Environment env = solve_recursive(e, Environment::constant(false));
    Assignment out;
    for (const auto &eq : e) out[eq.lhs] = env(eq.lhs);
    return out;
}

/// Gauss elimination. Equations are processed right to left: the own
/// variable is replaced by false (mu) or true (nu), and the result is
/// substituted into every earlier equation. A left-to-right pass then reads
/// off the values.
inline Assignment solve_gauss(const EquationSystem &e) {
    require_nonempty(e);
    require_closed(e);
    std::vector<Formula> rhs;
    rhs.reserve(e.size());
    for (const auto &eq : e) rhs.push_back(expand_sets(eq.rhs));

    for (std::size_t i = e.size(); i-- > 0;) {
        const std::string &x = e[i].lhs;
        detail::Substitution own(x, Formula::constant(e[i].sign == Fixpoint::nu));
        rhs[i] = own(rhs[i]);
        detail::Substitution into(x, rhs[i]);
        for (std::size_t j = 0; j < i; ++j) rhs[j] = into(rhs[j]);
    }

    Assignment out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        detail::MemoEval eval(out);
        out[e[i].lhs] = eval(rhs[i]);
    }
    return out;
}

enum class SolveMethod { oracle, gauss };

inline Assignment solve(const EquationSystem &e, SolveMethod method = SolveMethod::gauss) {
    return method == SolveMethod::oracle ? solve_oracle(e) : solve_gauss(e);
}

/// Value of `f` under the solution of the closed system `e`.
inline bool solve_formula(const EquationSystem &e, const Formula &f, SolveMethod method = SolveMethod::gauss) {
    for (const auto &x : occ(f))
        if (!e.binds(x)) throw PreconditionError("formula mentions unbound variable " + x);
    if (e.empty()) return eval_formula(f, Assignment{});
    return eval_formula(f, solve(e, method));
}

} // namespace besgraph
