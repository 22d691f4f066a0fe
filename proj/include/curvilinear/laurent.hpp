#pragma once

/**
 * @file laurent.hpp
 * @brief Laurent polynomials in L and bivariate polynomials in (L, T).
 *
 * `LaurentPoly` is the value type of every motivic class: integer
 * coefficients, any integer exponent of L. `BiPoly` adds a second formal
 * variable T (identified with L^-s) whose exponents stay non-negative.
 *
 * Canonical text: terms by descending L-exponent, then ascending
 * T-exponent, e.g. `3*L^2 - L + 1 + 2*L^-1*T^3`.
 */

#include <algorithm>
#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "curvilinear/error.hpp"
#include "curvilinear/sparse_polynomial.hpp"

namespace curvilinear {

using Integer = mpz_class;

using LaurentPoly = SparsePolynomial<int, Integer, std::greater<int>>;

/// Exponent pair (L-exponent, T-exponent).
struct BiKey {
    int l = 0;
    int t = 0;

    friend BiKey operator+(BiKey a, BiKey b) { return {a.l + b.l, a.t + b.t}; }
    friend bool operator==(const BiKey&, const BiKey&) = default;
};

/// Descending L-exponent, then ascending T-exponent.
struct BiKeyOrder {
    bool operator()(const BiKey& a, const BiKey& b) const {
        if (a.l != b.l) return a.l > b.l;
        return a.t < b.t;
    }
};

using BiPoly = SparsePolynomial<BiKey, Integer, BiKeyOrder>;

/// L^e.
inline LaurentPoly lefschetz(int e = 1) { return LaurentPoly::monomial(e); }

/// L^l · T^t as a BiPoly.
inline BiPoly bi_monomial(int l, int t, const Integer& c = 1) {
    if (t < 0) throw Error(ErrorCode::InvalidArgument, "negative power of T in a polynomial");
    return BiPoly::monomial({l, t}, c);
}

inline BiPoly variable_T(int t = 1) { return bi_monomial(0, t); }
inline BiPoly variable_L(int l = 1) { return bi_monomial(l, 0); }

inline int min_exponent(const LaurentPoly& p) { return p.terms().rbegin()->first; }
inline int max_exponent(const LaurentPoly& p) { return p.terms().begin()->first; }

inline BiPoly embed(const LaurentPoly& p) {
    BiPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term({e, 0}, c);
    return r;
}

inline int t_degree(const BiPoly& p) {
    int d = 0;
    for (const auto& [k, c] : p.terms()) d = std::max(d, k.t);
    return d;
}

inline int t_valuation(const BiPoly& p) {
    int v = t_degree(p);
    for (const auto& [k, c] : p.terms()) v = std::min(v, k.t);
    return v;
}

/// Coefficient of T^j as a Laurent polynomial in L.
inline LaurentPoly t_coefficient(const BiPoly& p, int j) {
    LaurentPoly r;
    for (const auto& [k, c] : p.terms()) {
        if (k.t == j) r.add_term(k.l, c);
    }
    return r;
}

/// Splits a BiPoly into its T-coefficients, index = T-degree.
inline std::vector<LaurentPoly> t_coefficients(const BiPoly& p) {
    std::vector<LaurentPoly> out(p.is_zero() ? 0 : static_cast<std::size_t>(t_degree(p)) + 1);
    for (const auto& [k, c] : p.terms()) out[static_cast<std::size_t>(k.t)].add_term(k.l, c);
    return out;
}

inline BiPoly from_t_coefficients(const std::vector<LaurentPoly>& coeffs) {
    BiPoly r;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        for (const auto& [e, c] : coeffs[j].terms()) r.add_term({e, static_cast<int>(j)}, c);
    }
    return r;
}

/// Replaces T by L^a · T^b (b >= 1).
inline BiPoly substitute_T(const BiPoly& p, int a, int b) {
    if (b < 1) throw Error(ErrorCode::InvalidArgument, "T substitution needs a positive T exponent");
    BiPoly r;
    for (const auto& [k, c] : p.terms()) r.add_term({k.l + a * k.t, k.t * b}, c);
    return r;
}

namespace detail {

inline void append_factor(std::string& out, char var, int e) {
    if (e == 0) return;
    if (!out.empty() && out.back() != '-') out += '*';
    out += var;
    if (e != 1) out += '^' + std::to_string(e);
}

inline void append_term(std::string& out, const Integer& c, int l, int t) {
    const bool first = out.empty();
    Integer mag = abs(c);
    if (first) {
        if (c < 0) out += '-';
    } else {
        out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    append_factor(mono, 'L', l);
    append_factor(mono, 'T', t);
    if (mono.empty()) {
        out += mag.get_str();
    } else if (mag == 1) {
        out += mono;
    } else {
        out += mag.get_str() + "*" + mono;
    }
}

} // namespace detail

inline std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) detail::append_term(out, c, e, 0);
    return out;
}

inline std::string to_string(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : p.terms()) detail::append_term(out, c, k.l, k.t);
    return out;
}

/// Exact quotient a / b in Z[L, 1/L], or nullopt when b does not divide a.
inline std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
    if (a.is_zero()) return LaurentPoly{};
    const int a_lo = min_exponent(a);
    const int b_lo = min_exponent(b);
    // Dense, shifted so both have a nonzero constant term.
    std::vector<Integer> num(static_cast<std::size_t>(max_exponent(a) - a_lo) + 1);
    std::vector<Integer> den(static_cast<std::size_t>(max_exponent(b) - b_lo) + 1);
    for (const auto& [e, c] : a.terms()) num[static_cast<std::size_t>(e - a_lo)] = c;
    for (const auto& [e, c] : b.terms()) den[static_cast<std::size_t>(e - b_lo)] = c;
    if (den.size() > num.size()) return std::nullopt;

    const Integer& lead = den.back();
    LaurentPoly quotient;
    const long db = static_cast<long>(den.size()) - 1;
    for (long top = static_cast<long>(num.size()) - 1; top >= db; --top) {
        const auto ut = static_cast<std::size_t>(top);
        if (num[ut] == 0) continue;
        if (!mpz_divisible_p(num[ut].get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        Integer q = num[ut] / lead;
        const auto shift = static_cast<std::size_t>(top - db);
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= q * den[i];
        quotient.add_term(static_cast<int>(shift) + a_lo - b_lo, q);
    }
    for (const auto& c : num) {
        if (c != 0) return std::nullopt;
    }
    return quotient;
}

/// Exact quotient a / b in Z[L, 1/L][T], or nullopt when b does not divide a.
inline std::optional<BiPoly> divide_exact(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
    if (a.is_zero()) return BiPoly{};
    auto rem = t_coefficients(a);
    const auto den = t_coefficients(b);
    const std::size_t db = den.size() - 1;
    if (rem.size() < den.size()) return std::nullopt;

    std::vector<LaurentPoly> quotient(rem.size() - db);
    for (std::size_t top = rem.size(); top-- > db;) {
        if (rem[top].is_zero()) continue;
        auto q = divide_exact(rem[top], den[db]);
        if (!q) return std::nullopt;
        const std::size_t shift = top - db;
        for (std::size_t i = 0; i <= db; ++i) rem[shift + i] -= *q * den[i];
        quotient[shift] = std::move(*q);
    }
    for (const auto& c : rem) {
        if (!c.is_zero()) return std::nullopt;
    }
    return from_t_coefficients(quotient);
}

} // namespace curvilinear
