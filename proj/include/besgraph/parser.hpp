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
#include <string>
#include <string_view>
#include <vector>

#include "besgraph/bes.hpp"
#include "besgraph/error.hpp"
#include "besgraph/formula.hpp"

namespace besgraph {

namespace detail {

// Recursive-descent parser for the BES text format:
//
//   bes      := equation*
//   equation := ("mu" | "nu") IDENT "=" formula ";"
//   formula  := conj ("||" conj)*
//   conj     := atom ("&&" atom)*
//   atom     := "true" | "false" | IDENT | "(" formula ")"
//             | ("AND" | "OR") "{" IDENT ("," IDENT)* "}"
//
// Chains of one operator nest to the left. "//" starts a line comment.
class BesParser {
public:
    explicit BesParser(std::string_view text) : text_(text) { advance(); }

    EquationSystem parse_system() {
        std::vector<Equation> equations;
        std::set<std::string> seen;
        while (tok_.kind != Tok::end) {
            const Token start = tok_;
            Fixpoint sign;
            if (is_word("mu")) sign = Fixpoint::mu;
            else if (is_word("nu")) sign = Fixpoint::nu;
            else fail("expected 'mu' or 'nu'");
            advance();
            std::string lhs = expect_identifier();
            expect(Tok::equals, "'='");
            Formula rhs = parse_formula();
            expect(Tok::semicolon, "';'");
            if (!seen.insert(lhs).second)
                throw ValidationError("not well-formed: variable " + lhs + " is bound twice (line " +
                                      std::to_string(start.line) + ")");
            equations.push_back(Equation{sign, std::move(lhs), std::move(rhs)});
        }
        return EquationSystem(std::move(equations));
    }

    Formula parse_standalone_formula() {
        Formula f = parse_formula();
        if (tok_.kind != Tok::end) fail("unexpected trailing input");
        return f;
    }

private:
    enum class Tok { end, word, equals, semicolon, lparen, rparen, lbrace, rbrace, comma, andand, oror };

    struct Token {
        Tok kind = Tok::end;
        std::string text;
        std::size_t line = 1, column = 1;
    };

    [[noreturn]] void fail(const std::string &what) const {
        throw ParseError(what + (tok_.kind == Tok::end ? std::string(" at end of input")
                                                         : " near '" + tok_.text + "'"),
                         tok_.line, tok_.column);
    }

    bool is_word(std::string_view w) const { return tok_.kind == Tok::word && tok_.text == w; }

    void expect(Tok kind, const char *what) {
        if (tok_.kind != kind) fail(std::string("expected ") + what);
        advance();
    }

    std::string expect_identifier() {
        if (tok_.kind != Tok::word || is_keyword(tok_.text)) fail("expected identifier");
        std::string name = tok_.text;
        advance();
        return name;
    }

    Formula parse_formula() {
        Formula acc = parse_conj();
        while (tok_.kind == Tok::oror) {
            advance();
            acc = Formula::disj(acc, parse_conj());
        }
        return acc;
    }

    Formula parse_conj() {
        Formula acc = parse_atom();
        while (tok_.kind == Tok::andand) {
            advance();
            acc = Formula::conj(acc, parse_atom());
        }
        return acc;
    }

    Formula parse_atom() {
        if (tok_.kind == Tok::lparen) {
            advance();
            Formula f = parse_formula();
            expect(Tok::rparen, "')'");
            return f;
        }
        if (tok_.kind != Tok::word) fail("expected formula");
        if (tok_.text == "true" || tok_.text == "false") {
            const bool v = tok_.text == "true";
            advance();
            return Formula::constant(v);
        }
        if (tok_.text == "AND" || tok_.text == "OR") {
            const bool conj = tok_.text == "AND";
            advance();
            expect(Tok::lbrace, "'{'");
            std::vector<std::string> members{expect_identifier()};
            while (tok_.kind == Tok::comma) {
                advance();
                members.push_back(expect_identifier());
            }
            expect(Tok::rbrace, "'}'");
            return conj ? Formula::and_set(std::move(members)) : Formula::or_set(std::move(members));
        }
        return Formula::variable(expect_identifier());
    }

    void skip_blanks() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r') {
                ++col_;
                ++pos_;
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    void advance() {
        skip_blanks();
        tok_ = Token{};
        tok_.line = line_;
        tok_.column = col_;
        if (pos_ >= text_.size()) return;
        const char c = text_[pos_];
        auto single = [&](Tok k) {
            tok_.kind = k;
            tok_.text = std::string(1, c);
            ++pos_;
            ++col_;
        };
        auto pair = [&](char second, Tok k) {
            if (pos_ + 1 >= text_.size() || text_[pos_ + 1] != second) {
                tok_.text = std::string(1, c);
                throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
            }
            tok_.kind = k;
            tok_.text = std::string{c, second};
            pos_ += 2;
            col_ += 2;
        };
        switch (c) {
        case '=': single(Tok::equals); return;
        case ';': single(Tok::semicolon); return;
        case '(': single(Tok::lparen); return;
        case ')': single(Tok::rparen); return;
        case '{': single(Tok::lbrace); return;
        case '}': single(Tok::rbrace); return;
        case ',': single(Tok::comma); return;
        case '&': pair('&', Tok::andand); return;
        case '|': pair('|', Tok::oror); return;
        default: break;
        }
        if (!is_identifier_start(c))
            throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
        const std::size_t begin = pos_;
        while (pos_ < text_.size() && is_identifier_char(text_[pos_])) ++pos_;
        tok_.kind = Tok::word;
        tok_.text = std::string(text_.substr(begin, pos_ - begin));
        col_ += pos_ - begin;
    }

    std::string_view text_;
    std::size_t pos_ = 0, line_ = 1, col_ = 1;
    Token tok_;
};

} // namespace detail

/// Parses BES text. Throws ParseError on malformed input and
/// ValidationError when a variable is bound twice.
inline EquationSystem parse_bes(std::string_view text) { return detail::BesParser(text).parse_system(); }

inline Formula parse_formula(std::string_view text) {
    return detail::BesParser(text).parse_standalone_formula();
}

inline std::string to_string(const Equation &eq) {
    return std::string(to_string(eq.sign)) + " " + eq.lhs + " = " + to_string(eq.rhs) + ";";
}

/// Canonical text; `parse_bes(print_bes(e)) == e`.
inline std::string print_bes(const EquationSystem &e) {
    std::string out;
    for (const auto &eq : e) {
        out += to_string(eq);
        out += '\n';
    }
    return out;
}

} // namespace besgraph
