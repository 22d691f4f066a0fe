#pragma once

/**
 * @file lt_parser.hpp
 * @brief Parser for expressions in L and T.
 *
 * Accepts the canonical rendering of LaurentPoly, BiPoly and
 * FactoredRational, plus ordinary hand-written variants:
 *
 *     expr  := ['+'|'-'] term (('+'|'-') term)*
 *     term  := power (['*'|'/'] power)*        juxtaposition multiplies
 *     power := atom ['^' ['-'] integer]
 *     atom  := integer | 'L' | 'T' | '(' expr ')'
 */

#include <cctype>
#include <string>
#include <string_view>

#include "curvilinear/error.hpp"
#include "curvilinear/factored_rational.hpp"
#include "curvilinear/laurent.hpp"

namespace curvilinear {

namespace detail {

class LTParser {
public:
    explicit LTParser(std::string_view text) : text_(text) {}

    FactoredRational parse() {
        FactoredRational r = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return r.normalized();
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::SyntaxError, what + " at offset " + std::to_string(pos_), pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_atom(char c) const {
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'L' || c == 'T' || c == '(';
    }

    FactoredRational expr() {
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = text_[pos_] == '-';
            ++pos_;
        }
        FactoredRational acc = term();
        if (negate) acc = -acc;
        while (peek() == '+' || peek() == '-') {
            const bool minus = text_[pos_] == '-';
            ++pos_;
            FactoredRational rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    FactoredRational term() {
        FactoredRational acc = power();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * power();
            } else if (c == '/') {
                ++pos_;
                const std::size_t at = pos_;
                FactoredRational d = power();
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                acc = acc / d;
            } else if (starts_atom(c)) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    FactoredRational power() {
        FactoredRational base = atom();
        if (peek() != '^') return base;
        ++pos_;
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        const long e = integer_literal();
        if (e > 100000) fail("exponent too large");
        if (negative) {
            if (base.is_zero()) fail("negative power of zero");
            base = base.reciprocal();
        }
        return raise(base, static_cast<int>(e));
    }

    static FactoredRational raise(const FactoredRational& r, int e) {
        std::vector<DenominatorFactor> den;
        for (const auto& f : r.denominator()) den.push_back({f.base, f.multiplicity * e});
        if (e == 0) return FactoredRational(BiPoly(1));
        return FactoredRational(pow(r.numerator(), static_cast<unsigned>(e)), std::move(den)).normalized();
    }

    FactoredRational atom() {
        const char c = peek();
        if (c == 'L') {
            ++pos_;
            return FactoredRational(variable_L());
        }
        if (c == 'T') {
            ++pos_;
            return FactoredRational(variable_T());
        }
        if (c == '(') {
            ++pos_;
            FactoredRational inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return FactoredRational(BiPoly(Integer(std::string(text_.substr(start, pos_ - start)))));
        }
        fail(c == '\0' ? "unexpected end of input" : "expected a number, L, T or '('");
    }

    long integer_literal() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer exponent");
        if (pos_ - start > 9) fail("exponent too large");
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline FactoredRational parse_rational(std::string_view text) { return detail::LTParser(text).parse(); }

inline BiPoly parse_bipoly(std::string_view text) {
    FactoredRational r = parse_rational(text);
    if (!r.denominator().empty()) {
        throw Error(ErrorCode::SyntaxError, "'" + std::string(text) + "' is not a polynomial in L, 1/L, T", 0);
    }
    return r.numerator();
}

inline LaurentPoly parse_laurent(std::string_view text) {
    BiPoly p = parse_bipoly(text);
    if (t_degree(p) > 0) {
        throw Error(ErrorCode::SyntaxError, "'" + std::string(text) + "' involves T; expected a class in L", 0);
    }
    return t_coefficient(p, 0);
}

} // namespace curvilinear
