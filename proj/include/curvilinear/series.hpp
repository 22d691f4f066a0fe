#pragma once

/**
 * @file series.hpp
 * @brief Truncated power series in T with Laurent-polynomial coefficients.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "curvilinear/error.hpp"
#include "curvilinear/factored_rational.hpp"
#include "curvilinear/laurent.hpp"

namespace curvilinear {

/// Coefficients of T^0..T^K.
class SeriesT {
public:
    explicit SeriesT(int order) : coefficients_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative truncation order");
    }

    int order() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
    const LaurentPoly& operator[](int k) const { return coefficients_.at(static_cast<std::size_t>(k)); }
    LaurentPoly& operator[](int k) { return coefficients_.at(static_cast<std::size_t>(k)); }
    const std::vector<LaurentPoly>& coefficients() const noexcept { return coefficients_; }

    friend bool operator==(const SeriesT&, const SeriesT&) = default;

    /// Truncated Cauchy product; the result has the smaller of the two orders.
    friend SeriesT operator*(const SeriesT& a, const SeriesT& b) {
        SeriesT r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; i + j <= r.order(); ++j) r[i + j] += a[i] * b[j];
        }
        return r;
    }

private:
    std::vector<LaurentPoly> coefficients_;
};

namespace detail {

/// Inverse of a unit ±L^a in the Laurent ring.
inline LaurentPoly unit_inverse(const LaurentPoly& c) {
    if (c.size() != 1 || abs(c.terms().begin()->second) != 1) {
        throw Error(ErrorCode::NonInvertibleDenominator,
                    "denominator factor has constant term " + to_string(c) + ", not a unit ±L^a");
    }
    const auto& [e, s] = *c.terms().begin();
    return LaurentPoly::monomial(-e, s);
}

inline SeriesT truncate(const BiPoly& p, int order) {
    SeriesT s(order);
    for (const auto& [k, c] : p.terms()) {
        if (k.t <= order) s[k.t].add_term(k.l, c);
    }
    return s;
}

inline SeriesT inverse_series(const BiPoly& factor, int order) {
    const SeriesT f = truncate(factor, order);
    const LaurentPoly c0_inv = unit_inverse(f[0]);
    SeriesT inv(order);
    inv[0] = c0_inv;
    for (int k = 1; k <= order; ++k) {
        LaurentPoly acc;
        for (int j = 1; j <= k; ++j) {
            if (!f[j].is_zero()) acc += f[j] * inv[k - j];
        }
        inv[k] = -(c0_inv * acc);
    }
    return inv;
}

} // namespace detail

/// Power-series expansion of r in T up to T^order.
///
/// Every denominator factor must have a unit T^0-part (±L^a); otherwise the
/// expansion would leave the Laurent ring and NonInvertibleDenominator is
/// thrown.
inline SeriesT expand_series(const FactoredRational& r, int order) {
    SeriesT result = detail::truncate(r.numerator(), order);
    for (const auto& f : r.denominator()) {
        const SeriesT inv = detail::inverse_series(f.base, order);
        for (int m = 0; m < f.multiplicity; ++m) result = result * inv;
    }
    return result;
}

} // namespace curvilinear
