#pragma once

/**
 * @file univariate.hpp
 * @brief Dense univariate polynomials over Q with the pieces the blowup
 *        loop needs: Euclidean division, gcd, square-free decomposition and
 *        rational roots.
 */

#include <algorithm>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "curvilinear/error.hpp"

namespace curvilinear {

using Rational = mpq_class;

class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    RationalPolynomial(const Rational& constant) : c_{constant} { trim(); } // NOLINT

    /// x^k.
    static RationalPolynomial x_power(int k) {
        std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
        c.back() = 1;
        return RationalPolynomial(std::move(c));
    }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<Rational>& coefficients() const noexcept { return c_; }
    Rational operator[](int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : Rational(0);
    }
    const Rational& lead() const { return c_.back(); }

    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return RationalPolynomial(std::move(r));
    }
    friend RationalPolynomial operator-(const RationalPolynomial& a) {
        RationalPolynomial r = a;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) { return a + (-b); }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return RationalPolynomial(std::move(r));
    }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    RationalPolynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
        return RationalPolynomial(std::move(r));
    }

    RationalPolynomial monic() const {
        if (is_zero()) return {};
        RationalPolynomial r = *this;
        const Rational l = lead();
        for (auto& c : r.c_) c /= l;
        return r;
    }

    /// Largest k with x^k dividing the polynomial (0 for constants).
    int order_at_zero() const {
        int k = 0;
        while (k < degree() && c_[static_cast<std::size_t>(k)] == 0) ++k;
        return k;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Euclidean division a = q·b + r with deg r < deg b.
inline std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                                const RationalPolynomial& b) {
    if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
    std::vector<Rational> rem = a.coefficients();
    const int db = b.degree();
    if (a.degree() < db) return {RationalPolynomial{}, a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
    for (int top = a.degree(); top >= db; --top) {
        const Rational& lead = rem[static_cast<std::size_t>(top)];
        if (lead == 0) continue;
        const Rational factor = lead / b.lead();
        q[static_cast<std::size_t>(top - db)] = factor;
        for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(top - db + i)] -= factor * b[i];
    }
    return {RationalPolynomial(std::move(q)), RationalPolynomial(std::move(rem))};
}

/// Monic gcd; gcd(0, 0) = 0.
inline RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline RationalPolynomial exact_quotient(const RationalPolynomial& a, const RationalPolynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
    return q;
}

/// Yun's algorithm: p = c · Π a_i^i with each a_i monic, square-free and
/// pairwise coprime. Returns the non-constant (a_i, i).
inline std::vector<std::pair<RationalPolynomial, int>> squarefree_decomposition(const RationalPolynomial& p) {
    std::vector<std::pair<RationalPolynomial, int>> out;
    if (p.degree() < 1) return out;
    const RationalPolynomial dp = p.derivative();
    RationalPolynomial a0 = gcd(p, dp);
    RationalPolynomial b = exact_quotient(p, a0);
    RationalPolynomial c = exact_quotient(dp, a0);
    RationalPolynomial d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        RationalPolynomial a = gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a.monic(), i);
        b = exact_quotient(b, a);
        c = exact_quotient(d, a);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

namespace detail {

/// Positive divisors of |n| (n != 0), by trial division.
inline std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<std::pair<mpz_class, int>> primes;
    for (mpz_class d = 2; d * d <= n; ++d) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0) primes.emplace_back(d, e);
    }
    if (n > 1) primes.emplace_back(n, 1);
    std::vector<mpz_class> out{1};
    for (const auto& [prime, e] : primes) {
        const std::size_t count = out.size();
        mpz_class power = 1;
        for (int k = 1; k <= e; ++k) {
            power *= prime;
            for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] * power);
        }
    }
    return out;
}

} // namespace detail

/// Distinct rational roots of a nonzero polynomial.
inline std::vector<Rational> rational_roots(const RationalPolynomial& p) {
    if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "roots of the zero polynomial");
    std::vector<Rational> roots;
    const int z = p.order_at_zero();
    if (z > 0) roots.emplace_back(0);

    // Integer polynomial with the zero roots removed.
    mpz_class denom_lcm = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> ic;
    for (int k = z; k <= p.degree(); ++k) {
        Rational scaled = p[k] * denom_lcm;
        ic.push_back(scaled.get_num());
    }
    if (ic.size() <= 1) return roots;

    const auto num_candidates = detail::divisors(ic.front());
    const auto den_candidates = detail::divisors(ic.back());
    auto is_root = [&ic](const Rational& r) {
        Rational acc = 0;
        for (auto it = ic.rbegin(); it != ic.rend(); ++it) acc = acc * r + Rational(*it);
        return acc == 0;
    };
    for (const auto& q : den_candidates) {
        for (const auto& n : num_candidates) {
            for (int sign : {1, -1}) {
                Rational r(n * sign, q);
                r.canonicalize();
                if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
                if (is_root(r)) roots.push_back(r);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// Roots of p over the algebraic closure, grouped by what the caller can
/// do with them: rational roots with multiplicity, and irrational roots as
/// (total degree, multiplicity) blocks.
struct RootSummary {
    std::vector<std::pair<Rational, int>> rational;
    std::vector<std::pair<int, int>> irrational;
};

inline RootSummary summarize_roots(const RationalPolynomial& p) {
    RootSummary out;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        RationalPolynomial rest = factor;
        for (const auto& r : rational_roots(factor)) {
            out.rational.emplace_back(r, mult);
            rest = exact_quotient(rest, RationalPolynomial({-r, Rational(1)}));
        }
        if (rest.degree() > 0) out.irrational.emplace_back(rest.degree(), mult);
    }
    std::sort(out.rational.begin(), out.rational.end());
    return out;
}

} // namespace curvilinear
