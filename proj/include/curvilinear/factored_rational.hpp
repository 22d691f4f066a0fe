#pragma once

/**
 * @file factored_rational.hpp
 * @brief Rational functions in (L, T) with an explicitly factored denominator.
 *
 * No bivariate gcd is ever computed. Equality is decided by
 * cross-multiplication, and `normalized()` only performs cheap rewrites:
 * monomial L-content moves into the numerator (L is a unit), identical
 * factors merge, and a factor is cancelled when it divides the numerator
 * exactly.
 */

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "curvilinear/error.hpp"
#include "curvilinear/laurent.hpp"

namespace curvilinear {

struct DenominatorFactor {
    BiPoly base;
    int multiplicity = 1;

    friend bool operator==(const DenominatorFactor&, const DenominatorFactor&) = default;
};

class FactoredRational {
public:
    FactoredRational() = default;
    FactoredRational(BiPoly numerator) : numerator_(std::move(numerator)) {} // NOLINT
    FactoredRational(const LaurentPoly& numerator) : numerator_(embed(numerator)) {} // NOLINT

    /// Keeps the representation exactly as given; call normalized() to tidy it.
    FactoredRational(BiPoly numerator, std::vector<DenominatorFactor> denominator)
        : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
        for (const auto& f : denominator_) {
            if (f.base.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero denominator factor");
            if (f.multiplicity < 1) throw Error(ErrorCode::InvalidArgument, "non-positive factor multiplicity");
        }
    }

    static FactoredRational over(BiPoly numerator, BiPoly factor, int multiplicity = 1) {
        return FactoredRational(std::move(numerator), {{std::move(factor), multiplicity}});
    }

    const BiPoly& numerator() const noexcept { return numerator_; }
    const std::vector<DenominatorFactor>& denominator() const noexcept { return denominator_; }
    bool is_zero() const noexcept { return numerator_.is_zero(); }

    BiPoly denominator_product() const {
        BiPoly r(1);
        for (const auto& f : denominator_) r *= pow(f.base, static_cast<unsigned>(f.multiplicity));
        return r;
    }

    FactoredRational normalized() const;

    FactoredRational reciprocal() const {
        if (is_zero()) throw Error(ErrorCode::InvalidArgument, "reciprocal of zero");
        return FactoredRational(denominator_product(), {{numerator_, 1}}).normalized();
    }

    friend FactoredRational operator*(const FactoredRational& a, const FactoredRational& b) {
        auto den = a.denominator_;
        den.insert(den.end(), b.denominator_.begin(), b.denominator_.end());
        return FactoredRational(a.numerator_ * b.numerator_, std::move(den)).normalized();
    }

    friend FactoredRational operator-(const FactoredRational& a) {
        return FactoredRational(-a.numerator_, a.denominator_);
    }

    friend FactoredRational operator+(const FactoredRational& a, const FactoredRational& b) {
        const FactoredRational x = a.normalized();
        const FactoredRational y = b.normalized();
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        // Common denominator: per distinct base, the larger multiplicity.
        std::vector<DenominatorFactor> common = x.denominator_;
        for (const auto& f : y.denominator_) {
            auto it = std::find_if(common.begin(), common.end(),
                                   [&](const DenominatorFactor& g) { return g.base == f.base; });
            if (it == common.end()) {
                common.push_back(f);
            } else {
                it->multiplicity = std::max(it->multiplicity, f.multiplicity);
            }
        }
        auto lift = [&common](const FactoredRational& r) {
            BiPoly num = r.numerator_;
            for (const auto& g : common) {
                int have = 0;
                for (const auto& f : r.denominator_) {
                    if (f.base == g.base) have = f.multiplicity;
                }
                if (g.multiplicity > have) num *= pow(g.base, static_cast<unsigned>(g.multiplicity - have));
            }
            return num;
        };
        BiPoly num = lift(x) + lift(y);
        return FactoredRational(std::move(num), std::move(common)).normalized();
    }

    friend FactoredRational operator-(const FactoredRational& a, const FactoredRational& b) { return a + (-b); }

    friend FactoredRational operator/(const FactoredRational& a, const FactoredRational& b) {
        return a * b.reciprocal();
    }

    /// Same rational function, decided by cross-multiplication.
    friend bool rat_eq(const FactoredRational& a, const FactoredRational& b) {
        return a.numerator_ * b.denominator_product() == b.numerator_ * a.denominator_product();
    }
    friend bool operator==(const FactoredRational& a, const FactoredRational& b) { return rat_eq(a, b); }

private:
    BiPoly numerator_;
    std::vector<DenominatorFactor> denominator_;
};

inline FactoredRational FactoredRational::normalized() const {
    if (numerator_.is_zero()) return {};
    BiPoly num = numerator_;
    std::vector<DenominatorFactor> factors;

    auto merge = [&factors](BiPoly base, int mult) {
        for (auto& f : factors) {
            if (f.base == base) {
                f.multiplicity += mult;
                return;
            }
        }
        factors.push_back({std::move(base), mult});
    };

    for (const auto& f : denominator_) {
        int l_lo = f.base.terms().begin()->first.l;
        int t_lo = f.base.terms().begin()->first.t;
        for (const auto& [k, c] : f.base.terms()) {
            l_lo = std::min(l_lo, k.l);
            t_lo = std::min(t_lo, k.t);
        }
        BiPoly base = f.base.shifted({-l_lo, -t_lo});
        num = num.shifted({-l_lo * f.multiplicity, 0});
        if (t_lo > 0) merge(variable_T(), t_lo * f.multiplicity);
        if (base.terms().begin()->second < 0) {
            base = -base;
            if (f.multiplicity % 2 != 0) num = -num;
        }
        if (base == BiPoly(1)) continue;
        merge(std::move(base), f.multiplicity);
    }

    for (auto& f : factors) {
        while (f.multiplicity > 0) {
            auto q = divide_exact(num, f.base);
            if (!q) break;
            num = std::move(*q);
            --f.multiplicity;
        }
    }
    std::erase_if(factors, [](const DenominatorFactor& f) { return f.multiplicity == 0; });
    std::sort(factors.begin(), factors.end(), [](const DenominatorFactor& a, const DenominatorFactor& b) {
        return to_string(a.base) < to_string(b.base);
    });
    return FactoredRational(std::move(num), std::move(factors));
}

/// Replaces T by L^a · T^b in numerator and every denominator factor.
inline FactoredRational substitute_T(const FactoredRational& r, int a, int b) {
    std::vector<DenominatorFactor> den;
    den.reserve(r.denominator().size());
    for (const auto& f : r.denominator()) den.push_back({substitute_T(f.base, a, b), f.multiplicity});
    return FactoredRational(substitute_T(r.numerator(), a, b), std::move(den));
}

inline std::string to_string(const FactoredRational& r) {
    if (r.denominator().empty()) return to_string(r.numerator());
    auto wrap = [](const BiPoly& p) {
        std::string s = to_string(p);
        return p.size() > 1 ? "(" + s + ")" : s;
    };
    auto wrap_factor = [](const BiPoly& p) {
        std::string s = to_string(p);
        const bool bare = std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)); });
        return bare ? s : "(" + s + ")";
    };
    std::string den;
    for (const auto& f : r.denominator()) {
        if (!den.empty()) den += '*';
        den += wrap_factor(f.base);
        if (f.multiplicity != 1) den += '^' + std::to_string(f.multiplicity);
    }
    const bool single = r.denominator().size() == 1 && r.denominator().front().multiplicity == 1;
    return wrap(r.numerator()) + " / " + (single ? den : "(" + den + ")");
}

} // namespace curvilinear
