#pragma once

/**
 * @file zeta.hpp
 * @brief Curvilinear Igusa zeta function and curvilinear Hilbert classes.
 *
 * Two routes meet here. The Denef-type sum over order-1 divisors gives the
 * zeta function Z(T) in closed form (T stands for L^-s). Independently,
 * Z(T) and the generating series Q(T) = Σ_{k≥2} H_k T^k are related by
 *
 *     Z(T) = c(T) + (L − 1)/L² · (1 − 1/T) · Q(T · L^-(n−1))
 *
 * with constant term c(T) = T·(L^-n − L^-2n). Comparing T^k coefficients
 * of both sides gives the forward recursion for H_k.
 */

#include <algorithm>
#include <optional>
#include <vector>

#include "curvilinear/error.hpp"
#include "curvilinear/factored_rational.hpp"
#include "curvilinear/laurent.hpp"
#include "curvilinear/resolution.hpp"
#include "curvilinear/series.hpp"

namespace curvilinear {

/// Which constant term to use in the zeta/Q identity. `verbatim` carries
/// the extra factor L^-n of the historically printed statement, under
/// which the smooth-line case no longer balances.
enum class ConstantTerm { corrected, verbatim };

/// [CHilb^k_0] for k = 2..k_max.
class HilbTable {
public:
    HilbTable(std::vector<LaurentPoly> classes, std::optional<int> threshold)
        : classes_(std::move(classes)), threshold_(threshold) {}

    int k_max() const noexcept { return static_cast<int>(classes_.size()) + 1; }
    const LaurentPoly& operator[](int k) const { return classes_.at(static_cast<std::size_t>(k - 2)); }
    const std::vector<LaurentPoly>& classes() const noexcept { return classes_; }
    std::optional<int> threshold() const noexcept { return threshold_; }

private:
    std::vector<LaurentPoly> classes_;
    std::optional<int> threshold_;
};

/// T·(L^-n − L^-2n), or the verbatim variant with one more factor L^-n.
inline BiPoly zeta_constant_term(int n, ConstantTerm mode = ConstantTerm::corrected) {
    const int shift = mode == ConstantTerm::verbatim ? -n : 0;
    return bi_monomial(-n + shift, 1) - bi_monomial(-2 * n + shift, 1);
}

/// Z(T) = (1/L − 1/L²)·L^-(n−1) · Σ_{i∈S} T^N_i L^-ν_i ([E_i°] + T/(L − T)·(L − 1)·[E_i ∩ Ṽ°]).
inline FactoredRational denef_zeta(const ResolutionData& res) {
    const int n = res.ambient_dim;
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "ambient dimension must be at least 2");
    const BiPoly prefactor = bi_monomial(-1 - (n - 1), 0) - bi_monomial(-2 - (n - 1), 0);
    const BiPoly l_minus_t = variable_L() - variable_T();
    FactoredRational sum;
    for (int id : order_one_set(res)) {
        const Divisor& d = res.divisor(id);
        const BiPoly weight = bi_monomial(-d.nu, d.N);
        const FactoredRational open(embed(class_open(res, id)));
        const FactoredRational strict = FactoredRational::over(
            variable_T() * (variable_L() - BiPoly(1)) * embed(class_strict(res, id)), l_minus_t);
        sum = sum + FactoredRational(weight) * (open + strict);
    }
    return FactoredRational(prefactor) * sum;
}

/// Q as a function of its own variable → Z, through the identity above.
inline FactoredRational igusa_from_Q(const FactoredRational& q, int n, ConstantTerm mode = ConstantTerm::corrected) {
    const FactoredRational c(zeta_constant_term(n, mode));
    // (L − 1)/L² · (1 − 1/T) = (L − 1)(T − 1) / (L² T)
    const FactoredRational bridge = FactoredRational::over(
        (variable_L() - BiPoly(1)) * (variable_T() - BiPoly(1)) * variable_L(-2), variable_T());
    return c + bridge * substitute_T(q, -(n - 1), 1);
}

/// Q(T) in closed form, solved out of the identity applied to the Denef zeta.
inline FactoredRational q_series_closed(const ResolutionData& res, ConstantTerm mode = ConstantTerm::corrected) {
    const int n = res.ambient_dim;
    const FactoredRational z = denef_zeta(res);
    const FactoredRational c(zeta_constant_term(n, mode));
    // Q(T·L^-(n−1)) = (Z − c) · L² T / ((L − 1)(T − 1))
    const BiPoly l_minus_1 = variable_L() - BiPoly(1);
    const BiPoly t_minus_1 = variable_T() - BiPoly(1);
    if (l_minus_1.is_zero() || t_minus_1.is_zero()) {
        throw Error(ErrorCode::DivisionByZeroSeries, "vanishing (1 - L^s) factor");
    }
    const FactoredRational inverse_bridge(variable_L(2) * variable_T(), {{l_minus_1, 1}, {t_minus_1, 1}});
    const FactoredRational shifted = (z - c) * inverse_bridge;
    return substitute_T(shifted, n - 1, 1).normalized();
}

namespace detail {

inline LaurentPoly base_class(const ResolutionData& res) {
    if (res.h2) return *res.h2;
    if (res.ambient_dim != 2) {
        throw Error(ErrorCode::MissingClassData, "H_2 must be supplied explicitly in ambient dimension " +
                                                     std::to_string(res.ambient_dim));
    }
    std::optional<int> mult = res.origin_mult;
    if (!mult) {
        for (const auto& d : res.divisors) {
            if (d.nu == 1 && d.m == 1) mult = d.N;
        }
    }
    if (!mult) throw Error(ErrorCode::MissingClassData, "neither H_2 nor the origin multiplicity is known");
    return *mult == 1 ? LaurentPoly(1) : lefschetz() + LaurentPoly(1);
}

} // namespace detail

/// Largest N_i over order-1 divisors when there is no smooth branch.
inline std::optional<int> threshold(const ResolutionData& res, bool smooth_branch) {
    if (smooth_branch) return std::nullopt;
    std::optional<int> best;
    for (int id : order_one_set(res)) best = std::max(best.value_or(0), res.divisor(id).N);
    return best;
}

/// H_2..H_{k_max} by the forward recursion
///   H_{k+1} = L^(n−1) H_k − L^((k+1)(n−1)) · RHS_k,
///   RHS_k   = L^-(n−1) (Σ_{N_i=k} L^-ν_i [E_i°] + Σ_{m≥1, N_i+m=k} L^(-ν_i−m)(L − 1)[E_i ∩ Ṽ°]).
inline HilbTable hilb_recursion(const ResolutionData& res, int k_max) {
    if (k_max < 2) throw Error(ErrorCode::InvalidArgument, "k_max must be at least 2");
    const int n = res.ambient_dim;
    const std::vector<int> order_one = order_one_set(res);

    std::vector<LaurentPoly> h{detail::base_class(res)};
    for (int k = 2; k < k_max; ++k) {
        LaurentPoly rhs;
        for (int id : order_one) {
            const Divisor& d = res.divisor(id);
            if (d.N == k) rhs += lefschetz(-d.nu) * class_open(res, id);
            const int m = k - d.N;
            if (m >= 1) rhs += lefschetz(-d.nu - m) * (lefschetz() - LaurentPoly(1)) * class_strict(res, id);
        }
        rhs = lefschetz(-(n - 1)) * rhs;
        h.push_back(lefschetz(n - 1) * h.back() - lefschetz((k + 1) * (n - 1)) * rhs);
    }

    std::optional<int> limit;
    if (n == 2) limit = threshold(res, has_smooth_branch(res));
    return HilbTable(std::move(h), limit);
}

/// Outcome of comparing the two routes on one resolution.
struct CrossRouteResult {
    bool zeta_match = false;     ///< igusa_from_Q(q_series_closed) rat_eq denef_zeta
    bool coefficient_match = false; ///< series coefficients equal the recursion
    std::optional<ErrorCode> expansion_error;
};

inline CrossRouteResult cross_route_check(const ResolutionData& res, int k_max = 8,
                                          ConstantTerm mode = ConstantTerm::corrected) {
    CrossRouteResult out;
    const FactoredRational q = q_series_closed(res, mode);
    out.zeta_match = rat_eq(igusa_from_Q(q, res.ambient_dim, mode), denef_zeta(res));
    try {
        const SeriesT series = expand_series(q, k_max);
        const HilbTable table = hilb_recursion(res, k_max);
        out.coefficient_match = series[0].is_zero() && series[1].is_zero();
        for (int k = 2; k <= k_max; ++k) out.coefficient_match = out.coefficient_match && series[k] == table[k];
    } catch (const Error& e) {
        out.expansion_error = e.code();
        out.coefficient_match = false;
    }
    return out;
}

} // namespace curvilinear
