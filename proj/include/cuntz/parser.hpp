#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

#include "element.hpp"

namespace cuntz {

// Carries the byte offset of the offending token.
struct ParseError : std::invalid_argument {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::invalid_argument(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

namespace detail {

/**
 * Expression grammar over generator symbols s1..s9:
 *
 *   expr   := term (('+' | '-') term)*
 *   term   := '-'* factor+                (juxtaposition is the product)
 *   factor := atom '*'*                   (postfix '*' is the adjoint)
 *   atom   := GEN | 'I' | 'i' | 'sqrt2' | NUMBER ('/' NUMBER)? | '(' expr ')'
 *
 * Precedence: adjoint > product > unary minus > addition.  NUMBER is an
 * unsigned decimal integer of arbitrary precision; NUMBER '/' NUMBER is an
 * exact fraction.
 */
struct Token {
    enum Kind { gen, ident_i, imag, sqrt2, number, plus, minus, star, slash,
                lparen, rparen, end } kind;
    std::size_t pos = 0;
    int gen_index = 0;    // for gen
    Integer value{};      // for number
};

inline std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t p = 0;
    const auto n = src.size();
    while (p < n) {
        const char ch = src[p];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++p;
            continue;
        }
        const std::size_t start = p;
        if (ch == 's') {
            // 'sqrt2' or a generator symbol
            if (src.compare(p, 5, "sqrt2") == 0) {
                out.push_back({Token::sqrt2, start});
                p += 5;
                continue;
            }
            ++p;
            std::string digits;
            while (p < n && std::isdigit(static_cast<unsigned char>(src[p])))
                digits += src[p++];
            if (digits.empty())
                throw ParseError("expected generator index after 's'", start);
            if (digits.size() > 1 || digits[0] == '0')
                throw ParseError("generator symbols are s1..s9", start);
            out.push_back({Token::gen, start, digits[0] - '0'});
            continue;
        }
        if (ch == 'I') {
            out.push_back({Token::ident_i, start});
            ++p;
            continue;
        }
        if (ch == 'i') {
            out.push_back({Token::imag, start});
            ++p;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string digits;
            while (p < n && std::isdigit(static_cast<unsigned char>(src[p])))
                digits += src[p++];
            Token t{Token::number, start};
            t.value = Integer(digits);
            out.push_back(std::move(t));
            continue;
        }
        switch (ch) {
            case '+': out.push_back({Token::plus, start}); break;
            case '-': out.push_back({Token::minus, start}); break;
            case '*': out.push_back({Token::star, start}); break;
            case '/': out.push_back({Token::slash, start}); break;
            case '(': out.push_back({Token::lparen, start}); break;
            case ')': out.push_back({Token::rparen, start}); break;
            default:
                throw ParseError(std::string("unexpected character '") + ch + "'",
                                 start);
        }
        ++p;
    }
    out.push_back({Token::end, n});
    return out;
}

class Parser {
  public:
    Parser(std::vector<Token> tokens, int d) : t_(std::move(tokens)), d_(d) {}

    Element run() {
        Element e = expr();
        if (cur().kind != Token::end)
            throw ParseError("trailing input", cur().pos);
        return e;
    }

  private:
    const Token& cur() const { return t_[i_]; }
    void advance() { ++i_; }

    static bool starts_atom(Token::Kind k) {
        return k == Token::gen || k == Token::ident_i || k == Token::imag ||
               k == Token::sqrt2 || k == Token::number || k == Token::lparen;
    }

    Element expr() {
        Element acc = term();
        while (cur().kind == Token::plus || cur().kind == Token::minus) {
            const bool neg = cur().kind == Token::minus;
            advance();
            Element rhs = term();
            acc = neg ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Element term() {
        bool neg = false;
        while (cur().kind == Token::minus) {
            neg = !neg;
            advance();
        }
        if (!starts_atom(cur().kind))
            throw ParseError("expected an operand", cur().pos);
        Element acc = factor();
        while (starts_atom(cur().kind)) acc *= factor();
        return neg ? -acc : acc;
    }

    Element factor() {
        Element a = atom();
        while (cur().kind == Token::star) {
            advance();
            a = adjoint(a);
        }
        return a;
    }

    Element atom() {
        const Token& t = cur();
        switch (t.kind) {
            case Token::gen: {
                if (t.gen_index > d_)
                    throw ParseError("generator s" + std::to_string(t.gen_index) +
                                         " exceeds configured generator count " +
                                         std::to_string(d_),
                                     t.pos);
                advance();
                return Element::generator(t.gen_index, d_);
            }
            case Token::ident_i:
                advance();
                return Element::identity(d_);
            case Token::imag:
                advance();
                return Scalar::i() * Element::identity(d_);
            case Token::sqrt2:
                advance();
                return Scalar::sqrt2() * Element::identity(d_);
            case Token::number: {
                Integer num = t.value;
                advance();
                if (cur().kind == Token::slash) {
                    advance();
                    if (cur().kind == Token::sqrt2) {
                        // num / sqrt2 = (num/2) sqrt2, exactly
                        advance();
                        return Scalar(Rational(0), Rational(num, 2), Rational(0),
                                      Rational(0)) *
                               Element::identity(d_);
                    }
                    if (cur().kind != Token::number)
                        throw ParseError("expected denominator", cur().pos);
                    Integer den = cur().value;
                    if (den == 0) throw ParseError("zero denominator", cur().pos);
                    advance();
                    return Scalar(Rational(num, den)) * Element::identity(d_);
                }
                return Scalar(Rational(num)) * Element::identity(d_);
            }
            case Token::lparen: {
                advance();
                Element e = expr();
                if (cur().kind != Token::rparen)
                    throw ParseError("expected ')'", cur().pos);
                advance();
                return e;
            }
            default:
                throw ParseError("expected an operand", t.pos);
        }
    }

    std::vector<Token> t_;
    int d_;
    std::size_t i_ = 0;
};

}  // namespace detail

/**
 * Parse an expression to an element.  With forced_d = 0 the generator count
 * is inferred as max(2, largest s-index used); otherwise forced_d is used
 * and larger indices are rejected.
 */
inline Element parse_expression(const std::string& src, int forced_d = 0) {
    auto tokens = detail::lex(src);
    int d = forced_d;
    if (d == 0) {
        d = 2;
        for (const auto& t : tokens)
            if (t.kind == detail::Token::gen && t.gen_index > d) d = t.gen_index;
    } else if (d < 2) {
        throw std::invalid_argument("parse_expression: need d >= 2");
    }
    return detail::Parser(std::move(tokens), d).run();
}

}  // namespace cuntz
