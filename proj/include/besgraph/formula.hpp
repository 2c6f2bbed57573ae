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
#include <cassert>
#include <cstddef>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "besgraph/error.hpp"

namespace besgraph {

enum class Fixpoint { mu, nu };

inline const char *to_string(Fixpoint sign) { return sign == Fixpoint::mu ? "mu" : "nu"; }

/// Immutable proposition formula in positive form.
///
/// Binary connectives keep their syntactic nesting; `X && (Y && Z)` and
/// `(X && Y) && Z` are different formulae. The n-ary set connectives of
/// standard recursive form store their members sorted and deduplicated.
/// Copies share structure, so passing a Formula by value is cheap.
class Formula {
public:
    enum class Kind { constant, variable, conjunction, disjunction, and_set, or_set };

    /// Default-constructed formula is `false`.
    Formula() : Formula(constant(false)) {}

    static Formula constant(bool value) {
        static const Formula t{make(Kind::constant, true, {}, {}, {}, {})};
        static const Formula f{make(Kind::constant, false, {}, {}, {}, {})};
        return value ? t : f;
    }
    static Formula truth() { return constant(true); }
    static Formula falsity() { return constant(false); }

    static Formula variable(std::string name) {
        return Formula{make(Kind::variable, false, std::move(name), {}, {}, {})};
    }
    static Formula conj(Formula left, Formula right) {
        return Formula{make(Kind::conjunction, false, {}, std::move(left.node_),
                            std::move(right.node_), {})};
    }
    static Formula disj(Formula left, Formula right) {
        return Formula{make(Kind::disjunction, false, {}, std::move(left.node_),
                            std::move(right.node_), {})};
    }
    static Formula and_set(std::vector<std::string> members) {
        return Formula{make_set(Kind::and_set, std::move(members))};
    }
    static Formula or_set(std::vector<std::string> members) {
        return Formula{make_set(Kind::or_set, std::move(members))};
    }

    Kind kind() const { return node_->kind; }
    bool is_constant() const { return kind() == Kind::constant; }
    bool is_variable() const { return kind() == Kind::variable; }
    bool is_binary() const { return kind() == Kind::conjunction || kind() == Kind::disjunction; }
    bool is_set() const { return kind() == Kind::and_set || kind() == Kind::or_set; }
    /// Conjunction or n-ary conjunction.
    bool is_and_like() const { return kind() == Kind::conjunction || kind() == Kind::and_set; }
    bool is_or_like() const { return kind() == Kind::disjunction || kind() == Kind::or_set; }

    bool value() const {
        assert(is_constant());
        return node_->value;
    }
    const std::string &name() const {
        assert(is_variable());
        return node_->name;
    }
    Formula left() const {
        assert(is_binary());
        return Formula{node_->left};
    }
    Formula right() const {
        assert(is_binary());
        return Formula{node_->right};
    }
    const std::vector<std::string> &members() const {
        assert(is_set());
        return node_->members;
    }

    std::size_t hash() const { return node_->hash; }
    /// Address of the shared node; equal ids imply equal formulae.
    const void *id() const { return node_.get(); }

    friend bool operator==(const Formula &a, const Formula &b) { return equal(a.node_.get(), b.node_.get()); }
    friend bool operator!=(const Formula &a, const Formula &b) { return !(a == b); }

private:
    struct Node {
        Kind kind;
        bool value;
        std::string name;
        std::shared_ptr<const Node> left, right;
        std::vector<std::string> members;
        std::size_t hash;
    };

    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    static std::size_t mix(std::size_t seed, std::size_t v) {
        return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
    }

    static std::shared_ptr<const Node> make(Kind kind, bool value, std::string name,
                                            std::shared_ptr<const Node> left,
                                            std::shared_ptr<const Node> right,
                                            std::vector<std::string> members) {
        std::size_t h = mix(0, static_cast<std::size_t>(kind));
        h = mix(h, value ? 1 : 0);
        h = mix(h, std::hash<std::string>{}(name));
        if (left) h = mix(h, left->hash);
        if (right) h = mix(h, right->hash);
        for (const auto &m : members) h = mix(h, std::hash<std::string>{}(m));
        return std::make_shared<const Node>(Node{kind, value, std::move(name), std::move(left),
                                                 std::move(right), std::move(members), h});
    }

    static std::shared_ptr<const Node> make_set(Kind kind, std::vector<std::string> members) {
        if (members.empty()) throw ValidationError("set connective needs at least one member");
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        return make(kind, false, {}, {}, {}, std::move(members));
    }

    static bool equal(const Node *a, const Node *b) {
        if (a == b) return true;
        if (a->hash != b->hash || a->kind != b->kind) return false;
        switch (a->kind) {
        case Kind::constant: return a->value == b->value;
        case Kind::variable: return a->name == b->name;
        case Kind::conjunction:
        case Kind::disjunction:
            return equal(a->left.get(), b->left.get()) && equal(a->right.get(), b->right.get());
        case Kind::and_set:
        case Kind::or_set: return a->members == b->members;
        }
        return false;
    }

    std::shared_ptr<const Node> node_;
};

struct FormulaHash {
    std::size_t operator()(const Formula &f) const { return f.hash(); }
};

inline Formula operator&&(const Formula &a, const Formula &b) { return Formula::conj(a, b); }
inline Formula operator||(const Formula &a, const Formula &b) { return Formula::disj(a, b); }

inline bool is_keyword(std::string_view word) {
    return word == "mu" || word == "nu" || word == "true" || word == "false" || word == "AND" ||
           word == "OR";
}

inline bool is_identifier_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

inline bool is_identifier_char(char c) {
    return is_identifier_start(c) || (c >= '0' && c <= '9') || c == '\'';
}

/// True if `text` lexes as a single non-keyword identifier.
inline bool is_identifier(std::string_view text) {
    if (text.empty() || !is_identifier_start(text.front())) return false;
    for (char c : text)
        if (!is_identifier_char(c)) return false;
    return !is_keyword(text);
}

namespace detail {

inline void print_set(std::string &out, const char *keyword, const std::vector<std::string> &members) {
    out += keyword;
    out += '{';
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out += ',';
        out += members[i];
    }
    out += '}';
}

// A binary child is parenthesised unless it is the left operand of the same
// connective; left-nested chains print flat and reparse to the same tree.
inline void print_formula(std::string &out, const Formula &f) {
    switch (f.kind()) {
    case Formula::Kind::constant: out += f.value() ? "true" : "false"; return;
    case Formula::Kind::variable: out += f.name(); return;
    case Formula::Kind::and_set: print_set(out, "AND", f.members()); return;
    case Formula::Kind::or_set: print_set(out, "OR", f.members()); return;
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction: {
        const Formula l = f.left(), r = f.right();
        const bool lp = l.is_binary() && l.kind() != f.kind();
        const bool rp = r.is_binary();
        if (lp) out += '(';
        print_formula(out, l);
        if (lp) out += ')';
        out += f.kind() == Formula::Kind::conjunction ? " && " : " || ";
        if (rp) out += '(';
        print_formula(out, r);
        if (rp) out += ')';
        return;
    }
    }
}

} // namespace detail

/// Canonical text of a formula; injective on formulae.
inline std::string to_string(const Formula &f) {
    std::string out;
    detail::print_formula(out, f);
    return out;
}

/// The total order on formulae used to linearise set-like constructions:
/// `true` before `false` before everything else, the rest compared by their
/// canonical text.
struct FormulaOrder {
    static int category(const Formula &f) {
        if (f.is_constant()) return f.value() ? 0 : 1;
        return 2;
    }
    bool operator()(const Formula &a, const Formula &b) const {
        const int ca = category(a), cb = category(b);
        if (ca != cb) return ca < cb;
        if (ca < 2) return false;
        return to_string(a) < to_string(b);
    }
};

/// The same order lifted to strings that name formulae (graph labels).
struct LabelOrder {
    static int category(std::string_view s) {
        if (s == "true") return 0;
        if (s == "false") return 1;
        return 2;
    }
    bool operator()(std::string_view a, std::string_view b) const {
        const int ca = category(a), cb = category(b);
        if (ca != cb) return ca < cb;
        return a < b;
    }
};

inline void collect_occ(const Formula &f, std::set<std::string> &out) {
    switch (f.kind()) {
    case Formula::Kind::constant: return;
    case Formula::Kind::variable: out.insert(f.name()); return;
    case Formula::Kind::and_set:
    case Formula::Kind::or_set: out.insert(f.members().begin(), f.members().end()); return;
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
        collect_occ(f.left(), out);
        collect_occ(f.right(), out);
        return;
    }
}

inline std::set<std::string> occ(const Formula &f) {
    std::set<std::string> out;
    collect_occ(f, out);
    return out;
}

/// No set connectives anywhere.
inline bool is_general_syntax(const Formula &f) {
    if (f.is_set()) return false;
    if (f.is_binary()) return is_general_syntax(f.left()) && is_general_syntax(f.right());
    return true;
}

/// A single variable or a single set connective.
inline bool is_srf_syntax(const Formula &f) { return f.is_variable() || f.is_set(); }

/// Rewrites set connectives into left-nested binary chains.
inline Formula expand_sets(const Formula &f) {
    if (f.is_binary()) {
        Formula l = expand_sets(f.left()), r = expand_sets(f.right());
        return f.kind() == Formula::Kind::conjunction ? Formula::conj(l, r) : Formula::disj(l, r);
    }
    if (!f.is_set()) return f;
    const auto &m = f.members();
    Formula acc = Formula::variable(m.front());
    for (std::size_t i = 1; i < m.size(); ++i) {
        Formula v = Formula::variable(m[i]);
        acc = f.kind() == Formula::Kind::and_set ? Formula::conj(acc, v) : Formula::disj(acc, v);
    }
    return acc;
}

} // namespace besgraph
