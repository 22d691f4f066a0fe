#pragma once

/**
 * @file curve.hpp
 * @brief Plane curve germs f ∈ Q[x, y] with f(0, 0) = 0.
 *
 * Concrete syntax (variables fixed to x and y):
 *
 *     expr        := ['+'|'-'] term (('+'|'-') term)*
 *     term        := atom (['*'] atom)*
 *     atom        := (coefficient | 'x' | 'y' | '(' expr ')') ['^' positive-integer]
 *     coefficient := integer ['/' integer]
 */

#include <cctype>
#include <string>
#include <string_view>
#include <utility>

#include "curvilinear/bivariate.hpp"
#include "curvilinear/error.hpp"

namespace curvilinear {

class CurvePoly {
public:
    explicit CurvePoly(QPoly2 f) : f_(std::move(f)) {
        if (f_.is_zero()) throw Error(ErrorCode::ZeroConstantViolation, "the zero polynomial does not define a curve");
        if (f_.coefficient({0, 0}) != 0) {
            throw Error(ErrorCode::ZeroConstantViolation,
                        "f(0,0) = " + f_.coefficient({0, 0}).get_str() + ", the curve must pass through the origin");
        }
    }

    const QPoly2& poly() const noexcept { return f_; }

    friend bool operator==(const CurvePoly&, const CurvePoly&) = default;

private:
    QPoly2 f_;
};

/// Order of vanishing of f at p; 0 iff f(p) ≠ 0.
inline int multiplicity_at(const QPoly2& f, const Rational& px, const Rational& py) {
    if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "multiplicity of the zero polynomial");
    return order_at_origin(translate(f, px, py));
}

inline int multiplicity_at(const CurvePoly& f, const Rational& px = 0, const Rational& py = 0) {
    return multiplicity_at(f.poly(), px, py);
}

inline std::string to_string(const QPoly2& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : f.terms()) {
        const bool first = out.empty();
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const Rational mag = abs(c);
        std::string mono;
        auto put = [&mono](char var, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += '*';
            mono += var;
            if (e != 1) mono += '^' + std::to_string(e);
        };
        put('x', k.x);
        put('y', k.y);
        if (mono.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.get_str() + "*" + mono;
        }
    }
    return out;
}

inline std::string to_string(const CurvePoly& f) { return to_string(f.poly()); }

namespace detail {

class CurveParser {
public:
    explicit CurveParser(std::string_view text) : text_(text) {}

    QPoly2 parse() {
        QPoly2 f = expr();
        if (peek() != '\0') fail("unexpected character");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::SyntaxError, what + " at offset " + std::to_string(pos_), pos_);
    }

    char peek() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    static bool starts_atom(char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == '(';
    }

    QPoly2 expr() {
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = text_[pos_] == '-';
            ++pos_;
        }
        QPoly2 acc = term();
        if (negate) acc = -acc;
        while (peek() == '+' || peek() == '-') {
            const bool minus = text_[pos_] == '-';
            ++pos_;
            QPoly2 t = term();
            if (minus) {
                acc -= t;
            } else {
                acc += t;
            }
        }
        return acc;
    }

    QPoly2 term() {
        QPoly2 acc = atom();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= atom();
            } else if (starts_atom(c)) {
                acc *= atom();
            } else {
                return acc;
            }
        }
    }

    QPoly2 atom() {
        QPoly2 base;
        const char c = peek();
        if (c == 'x') {
            ++pos_;
            base = var_x();
        } else if (c == 'y') {
            ++pos_;
            base = var_y();
        } else if (c == '(') {
            ++pos_;
            base = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            base = QPoly2(coefficient());
        } else {
            fail(c == '\0' ? "unexpected end of input" : "expected a coefficient, x, y or '('");
        }
        if (peek() == '^') {
            ++pos_;
            peek();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a positive integer exponent");
            if (pos_ - start > 6) fail("exponent too large");
            const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
            if (e < 1) {
                pos_ = start;
                fail("exponent must be positive");
            }
            base = pow(base, static_cast<unsigned>(e));
        }
        return base;
    }

    Rational coefficient() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        mpz_class num(std::string(text_.substr(start, pos_ - start)));
        if (peek() != '/') return Rational(num);
        ++pos_;
        peek();
        const std::size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected an integer denominator");
        mpz_class den(std::string(text_.substr(dstart, pos_ - dstart)));
        if (den == 0) {
            pos_ = dstart;
            fail("zero denominator");
        }
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses f and checks f(0, 0) = 0.
inline CurvePoly parse_curve(std::string_view text) { return CurvePoly(detail::CurveParser(text).parse()); }

/// Parses without the curve invariant (any polynomial in x, y).
inline QPoly2 parse_xy_polynomial(std::string_view text) { return detail::CurveParser(text).parse(); }

} // namespace curvilinear
