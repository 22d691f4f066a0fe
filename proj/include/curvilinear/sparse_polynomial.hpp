#pragma once

/**
 * @file sparse_polynomial.hpp
 * @brief Sparse polynomial over an exact coefficient ring.
 *
 * A polynomial is a map from exponent keys to coefficients. The key type
 * supplies `operator+` (exponent addition on multiplication) and the map
 * ordering fixes the canonical term order used for rendering. Zero
 * coefficients are never stored, so structural equality is polynomial
 * equality.
 */

#include <map>
#include <utility>

namespace curvilinear {

template <class Key, class Coeff, class Order = std::less<Key>>
class SparsePolynomial {
public:
    using key_type = Key;
    using coeff_type = Coeff;
    using map_type = std::map<Key, Coeff, Order>;

    SparsePolynomial() = default;

    /// Constant polynomial; `Key{}` is the zero exponent.
    SparsePolynomial(const Coeff& c) { add_term(Key{}, c); } // NOLINT: implicit by design of ring literals
    SparsePolynomial(int c) : SparsePolynomial(Coeff(c)) {}   // NOLINT

    static SparsePolynomial monomial(const Key& key, const Coeff& c = Coeff(1)) {
        SparsePolynomial p;
        p.add_term(key, c);
        return p;
    }

    const map_type& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Coeff coefficient(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    /// Adds c·X^key in place, dropping the entry if it cancels.
    void add_term(const Key& key, const Coeff& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SparsePolynomial& operator+=(const SparsePolynomial& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    SparsePolynomial& operator-=(const SparsePolynomial& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, Coeff(-c));
        return *this;
    }
    SparsePolynomial& operator*=(const SparsePolynomial& o) {
        *this = *this * o;
        return *this;
    }

    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }

    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
        SparsePolynomial r;
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                r.add_term(ka + kb, Coeff(ca * cb));
            }
        }
        return r;
    }

    friend SparsePolynomial operator-(SparsePolynomial a) {
        for (auto& [k, c] : a.terms_) c = -c;
        return a;
    }

    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
        return a.terms_ == b.terms_;
    }

    /// Multiplies every coefficient by a scalar.
    SparsePolynomial scaled(const Coeff& s) const {
        if (s == 0) return {};
        SparsePolynomial r = *this;
        for (auto& [k, c] : r.terms_) c *= s;
        return r;
    }

    /// Multiplies by the monomial X^shift.
    SparsePolynomial shifted(const Key& shift) const {
        SparsePolynomial r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k + shift, c);
        return r;
    }

private:
    map_type terms_;
};

template <class K, class C, class O>
SparsePolynomial<K, C, O> pow(const SparsePolynomial<K, C, O>& base, unsigned exponent) {
    SparsePolynomial<K, C, O> result(1);
    SparsePolynomial<K, C, O> b = base;
    while (exponent > 0) {
        if (exponent & 1u) result *= b;
        exponent >>= 1u;
        if (exponent > 0) b *= b;
    }
    return result;
}

} // namespace curvilinear
