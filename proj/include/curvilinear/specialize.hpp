#pragma once

/**
 * @file specialize.hpp
 * @brief Ring homomorphisms out of Z[L, 1/L]: Euler characteristic,
 *        point counts over F_q and weight polynomials.
 */

#include <functional>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "curvilinear/error.hpp"
#include "curvilinear/laurent.hpp"

namespace curvilinear {

/// Polynomial in t with integer coefficients (image of L ↦ t²).
struct WeightPolynomial {
    SparsePolynomial<int, Integer, std::greater<int>> coeffs;

    friend bool operator==(const WeightPolynomial&, const WeightPolynomial&) = default;
};

inline std::string to_string(const WeightPolynomial& w) {
    // Reuse the canonical Laurent renderer, swapping the variable name.
    std::string s = to_string(LaurentPoly(w.coeffs));
    for (char& c : s) {
        if (c == 'L') c = 't';
    }
    return s;
}

/// Value at L = 1.
inline Integer euler_characteristic(const LaurentPoly& p) {
    Integer sum = 0;
    for (const auto& [e, c] : p.terms()) sum += c;
    return sum;
}

/// Value at L = q; must be an integer.
inline Integer point_count(const LaurentPoly& p, long q) {
    if (q == 0 && !p.is_zero() && min_exponent(p) < 0) {
        throw Error(ErrorCode::InvalidArgument, "cannot evaluate a negative power of L at 0");
    }
    mpq_class value = 0;
    const mpz_class base = q;
    for (const auto& [e, c] : p.terms()) {
        mpz_class power;
        mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
        value += e < 0 ? mpq_class(c, power) : mpq_class(c * power);
    }
    value.canonicalize();
    if (value.get_den() != 1) {
        throw Error(ErrorCode::NonIntegralSpecialization,
                    to_string(p) + " at L=" + std::to_string(q) + " is " + value.get_str());
    }
    return value.get_num();
}

/// L ↦ t².
inline WeightPolynomial weight_polynomial(const LaurentPoly& p) {
    WeightPolynomial w;
    for (const auto& [e, c] : p.terms()) {
        if (e < 0) throw Error(ErrorCode::NegativeExponent, "weight polynomial of " + to_string(p));
        w.coeffs.add_term(2 * e, c);
    }
    return w;
}

struct EulerMode {};
struct PointCountMode {
    long q = 0;
};
struct WeightMode {};
using SpecializationMode = std::variant<EulerMode, PointCountMode, WeightMode>;
using SpecializedValue = std::variant<Integer, WeightPolynomial>;

inline SpecializedValue specialize(const LaurentPoly& p, const SpecializationMode& mode) {
    struct Visitor {
        const LaurentPoly& p;
        SpecializedValue operator()(EulerMode) const { return euler_characteristic(p); }
        SpecializedValue operator()(PointCountMode m) const { return point_count(p, m.q); }
        SpecializedValue operator()(WeightMode) const { return weight_polynomial(p); }
    };
    return std::visit(Visitor{p}, mode);
}

inline std::string to_string(const SpecializedValue& v) {
    if (const auto* n = std::get_if<Integer>(&v)) return n->get_str();
    return to_string(std::get<WeightPolynomial>(v));
}

} // namespace curvilinear
