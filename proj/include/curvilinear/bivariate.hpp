#pragma once

/**
 * @file bivariate.hpp
 * @brief Polynomials in (x, y) over Q and the local operations of a point
 *        blowup: translation, chart substitution, multiplicity.
 */

#include <algorithm>
#include <climits>
#include <vector>

#include <gmpxx.h>

#include "curvilinear/error.hpp"
#include "curvilinear/sparse_polynomial.hpp"
#include "curvilinear/univariate.hpp"

namespace curvilinear {

/// Exponents (x-degree, y-degree).
struct XYKey {
    int x = 0;
    int y = 0;

    friend XYKey operator+(XYKey a, XYKey b) { return {a.x + b.x, a.y + b.y}; }
    friend bool operator==(const XYKey&, const XYKey&) = default;
};

/// Total degree first, then descending x-degree: y^2 - x^3 renders as written.
struct XYKeyOrder {
    bool operator()(const XYKey& a, const XYKey& b) const {
        if (a.x + a.y != b.x + b.y) return a.x + a.y < b.x + b.y;
        return a.x > b.x;
    }
};

using QPoly2 = SparsePolynomial<XYKey, Rational, XYKeyOrder>;

inline QPoly2 var_x(int k = 1) { return QPoly2::monomial({k, 0}); }
inline QPoly2 var_y(int k = 1) { return QPoly2::monomial({0, k}); }

/// Lowest total degree of a nonzero term; INT_MAX for the zero polynomial.
inline int order_at_origin(const QPoly2& f) {
    int lo = INT_MAX;
    for (const auto& [k, c] : f.terms()) lo = std::min(lo, k.x + k.y);
    return lo;
}

inline int total_degree(const QPoly2& f) {
    int hi = 0;
    for (const auto& [k, c] : f.terms()) hi = std::max(hi, k.x + k.y);
    return hi;
}

inline Rational evaluate(const QPoly2& f, const Rational& x, const Rational& y) {
    Rational acc = 0;
    for (const auto& [k, c] : f.terms()) {
        Rational px = 1, py = 1;
        for (int i = 0; i < k.x; ++i) px *= x;
        for (int j = 0; j < k.y; ++j) py *= y;
        acc += c * px * py;
    }
    return acc;
}

/// f(x + a, y + b).
inline QPoly2 translate(const QPoly2& f, const Rational& a, const Rational& b) {
    if (a == 0 && b == 0) return f;
    QPoly2 shifted_x = var_x() + QPoly2(a);
    QPoly2 shifted_y = var_y() + QPoly2(b);
    QPoly2 r;
    for (const auto& [k, c] : f.terms()) {
        r += (pow(shifted_x, static_cast<unsigned>(k.x)) * pow(shifted_y, static_cast<unsigned>(k.y))).scaled(c);
    }
    return r;
}

/// Chart (u, v) ↦ (u, u·v), divided by u^e.
inline QPoly2 chart_x(const QPoly2& f, int e) {
    QPoly2 r;
    for (const auto& [k, c] : f.terms()) {
        const int ux = k.x + k.y - e;
        if (ux < 0) throw Error(ErrorCode::InvalidArgument, "chart division below the multiplicity");
        r.add_term({ux, k.y}, c);
    }
    return r;
}

/// Chart (u, v) ↦ (u·v, v), divided by v^e.
inline QPoly2 chart_y(const QPoly2& f, int e) {
    QPoly2 r;
    for (const auto& [k, c] : f.terms()) {
        const int vy = k.x + k.y - e;
        if (vy < 0) throw Error(ErrorCode::InvalidArgument, "chart division below the multiplicity");
        r.add_term({k.x, vy}, c);
    }
    return r;
}

/// f(0, v) as a polynomial in v.
inline RationalPolynomial restrict_to_x_zero(const QPoly2& f) {
    std::vector<Rational> c;
    for (const auto& [k, v] : f.terms()) {
        if (k.x != 0) continue;
        if (c.size() <= static_cast<std::size_t>(k.y)) c.resize(static_cast<std::size_t>(k.y) + 1, Rational(0));
        c[static_cast<std::size_t>(k.y)] = v;
    }
    return RationalPolynomial(std::move(c));
}

/// f(u, 0) as a polynomial in u.
inline RationalPolynomial restrict_to_y_zero(const QPoly2& f) {
    std::vector<Rational> c;
    for (const auto& [k, v] : f.terms()) {
        if (k.y != 0) continue;
        if (c.size() <= static_cast<std::size_t>(k.x)) c.resize(static_cast<std::size_t>(k.x) + 1, Rational(0));
        c[static_cast<std::size_t>(k.x)] = v;
    }
    return RationalPolynomial(std::move(c));
}

inline QPoly2 d_dx(const QPoly2& f) {
    QPoly2 r;
    for (const auto& [k, c] : f.terms()) {
        if (k.x > 0) r.add_term({k.x - 1, k.y}, c * k.x);
    }
    return r;
}

inline QPoly2 d_dy(const QPoly2& f) {
    QPoly2 r;
    for (const auto& [k, c] : f.terms()) {
        if (k.y > 0) r.add_term({k.x, k.y - 1}, c * k.y);
    }
    return r;
}

namespace detail {

/// f as Σ_j c_j(x) y^j.
using YPoly = std::vector<RationalPolynomial>;

inline YPoly to_ypoly(const QPoly2& f) {
    YPoly out;
    for (const auto& [k, c] : f.terms()) {
        if (out.size() <= static_cast<std::size_t>(k.y)) out.resize(static_cast<std::size_t>(k.y) + 1);
        out[static_cast<std::size_t>(k.y)] = out[static_cast<std::size_t>(k.y)] + RationalPolynomial::x_power(k.x) * c;
    }
    return out;
}

inline QPoly2 from_ypoly(const YPoly& p) {
    QPoly2 r;
    for (std::size_t j = 0; j < p.size(); ++j) {
        for (int i = 0; i <= p[j].degree(); ++i) r.add_term({i, static_cast<int>(j)}, p[j][i]);
    }
    return r;
}

inline void trim(YPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline RationalPolynomial content(const YPoly& p) {
    RationalPolynomial g;
    for (const auto& c : p) g = gcd(g, c);
    return g;
}

inline YPoly primitive_part(YPoly p) {
    trim(p);
    if (p.empty()) return p;
    const RationalPolynomial c = content(p);
    for (auto& coeff : p) coeff = exact_quotient(coeff, c);
    return p;
}

/// Pseudo-remainder of a by b in Q[x][y].
inline YPoly pseudo_remainder(YPoly a, const YPoly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const RationalPolynomial& lb = b.back();
    while (a.size() > db && !a.empty()) {
        const RationalPolynomial la = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (auto& c : a) c = c * lb;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] = a[shift + i] - la * b[i];
        trim(a);
    }
    return a;
}

} // namespace detail

/// Greatest common divisor in Q[x, y], up to a nonzero constant.
inline QPoly2 gcd(const QPoly2& f, const QPoly2& g) {
    using namespace detail;
    YPoly a = to_ypoly(f), b = to_ypoly(g);
    trim(a);
    trim(b);
    if (a.empty()) return from_ypoly(b);
    if (b.empty()) return from_ypoly(a);
    const RationalPolynomial c = gcd(content(a), content(b));
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        YPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = primitive_part(std::move(r));
    }
    a = primitive_part(a);
    for (auto& coeff : a) coeff = coeff * c;
    return from_ypoly(a);
}

/// True iff f has no repeated factor: gcd(f, ∂f/∂x, ∂f/∂y) is constant.
inline bool is_squarefree(const QPoly2& f) {
    const QPoly2 g = gcd(gcd(f, d_dx(f)), d_dy(f));
    return total_degree(g) == 0;
}

} // namespace curvilinear
