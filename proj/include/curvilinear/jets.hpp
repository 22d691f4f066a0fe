#pragma once

/**
 * @file jets.hpp
 * @brief Brute-force point counts of smooth punctual jets over F_p.
 *
 * Counts pairs (φ1, φ2) ∈ (F_p[t]/t^k)² with zero constant terms, nonzero
 * linear part, and f(φ1, φ2) ≡ 0 mod t^k. The reparametrisation group has
 * class (L − 1)·L^(k−2) and acts freely, so the count must equal
 * H_k(p)·(p − 1)·p^(k−2).
 *
 * Enumeration is depth-first over the coefficient pairs (a_j, b_j). Since
 * φ1, φ2 have no constant term, the t^j coefficient of f(φ) is
 * c10·a_j + c01·b_j plus a part fixed by the shallower levels, so each level
 * only visits the (a_j, b_j) that keep it zero.
 */

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "curvilinear/curve.hpp"
#include "curvilinear/error.hpp"
#include "curvilinear/specialize.hpp"
#include "curvilinear/zeta.hpp"

namespace curvilinear {

inline constexpr std::uint64_t default_jet_budget = 1'000'000'000ULL;
inline constexpr const char* jet_budget_env = "CURVILINEAR_JET_BUDGET";

/// Budget from the environment, falling back to the default.
inline std::uint64_t jet_budget_from_env() {
    const char* raw = std::getenv(jet_budget_env);
    if (raw == nullptr || *raw == '\0') return default_jet_budget;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0') {
        throw Error(ErrorCode::InvalidArgument, std::string(jet_budget_env) + " is not an integer: " + raw);
    }
    return v;
}

struct JetCountReport {
    long prime = 0;
    int k = 0;
    Integer raw_count;
    Integer predicted;
    bool match = false;
};

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

namespace detail {

struct ModTerm {
    int i = 0;
    int j = 0;
    std::uint64_t c = 0;
};

/// Reduces f's coefficients mod p; BadReduction if p divides a denominator.
inline std::vector<ModTerm> reduce_mod(const CurvePoly& f, long p) {
    std::vector<ModTerm> out;
    const mpz_class mod = p;
    for (const auto& [k, c] : f.poly().terms()) {
        mpz_class den = c.get_den();
        if (den % mod == 0) {
            throw Error(ErrorCode::BadReduction, "p = " + std::to_string(p) + " divides the denominator of " + c.get_str());
        }
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
        mpz_class r = (c.get_num() * inv) % mod;
        if (r < 0) r += mod;
        if (r != 0) out.push_back({k.x, k.y, r.get_ui()});
    }
    return out;
}

class JetCounter {
public:
    JetCounter(std::vector<ModTerm> terms, std::uint64_t p, int k) : terms_(std::move(terms)), p_(p), k_(k) {
        for (const auto& t : terms_) {
            if (t.i == 1 && t.j == 0) c10_ = t.c;
            if (t.i == 0 && t.j == 1) c01_ = t.c;
            max_x_ = std::max(max_x_, t.i);
            max_y_ = std::max(max_y_, t.j);
        }
        // powers[e][d] = coefficient of t^d in φ^e
        px_.assign(static_cast<std::size_t>(max_x_) + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(k_), 0));
        py_.assign(static_cast<std::size_t>(max_y_) + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(k_), 0));
        px_[0][0] = 1;
        py_[0][0] = 1;
        a_.assign(static_cast<std::size_t>(k_), 0);
        b_.assign(static_cast<std::size_t>(k_), 0);
    }

    /// Count with the linear part (a1, b1) fixed.
    std::uint64_t count_from(std::uint64_t a1, std::uint64_t b1) {
        set_level(1, a1, b1);
        if (k_ == 2) return 1;
        return descend(2);
    }

    /// Linear parts (a1, b1) ≠ (0, 0) that satisfy the t^1 condition.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> first_level_choices() const {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
        for (std::uint64_t a = 0; a < p_; ++a) {
            for (std::uint64_t b = 0; b < p_; ++b) {
                if (a == 0 && b == 0) continue;
                if ((c10_ * a + c01_ * b) % p_ == 0) out.emplace_back(a, b);
            }
        }
        return out;
    }

private:
    std::uint64_t mulmod(std::uint64_t x, std::uint64_t y) const { return (x * y) % p_; }

    /// Coefficients of t^level in φ^e for e ≥ 2; independent of (a_level, b_level).
    void extend_powers(int level) {
        const auto l = static_cast<std::size_t>(level);
        for (std::size_t e = 2; e < px_.size(); ++e) {
            std::uint64_t acc = 0;
            for (std::size_t s = 1; s < l; ++s) acc += mulmod(a_[s], px_[e - 1][l - s]);
            px_[e][l] = acc % p_;
        }
        for (std::size_t e = 2; e < py_.size(); ++e) {
            std::uint64_t acc = 0;
            for (std::size_t s = 1; s < l; ++s) acc += mulmod(b_[s], py_[e - 1][l - s]);
            py_[e][l] = acc % p_;
        }
    }

    void set_level(int level, std::uint64_t a, std::uint64_t b) {
        const auto l = static_cast<std::size_t>(level);
        a_[l] = a;
        b_[l] = b;
        if (px_.size() > 1) px_[1][l] = a;
        if (py_.size() > 1) py_[1][l] = b;
    }

    /// t^level coefficient of the nonlinear part of f(φ).
    std::uint64_t nonlinear_coefficient(int level) const {
        const auto l = static_cast<std::size_t>(level);
        std::uint64_t acc = 0;
        for (const auto& t : terms_) {
            if (t.i + t.j < 2) continue;
            const auto& xs = px_[static_cast<std::size_t>(t.i)];
            const auto& ys = py_[static_cast<std::size_t>(t.j)];
            std::uint64_t s = 0;
            for (std::size_t r = 0; r <= l; ++r) s += mulmod(xs[r], ys[l - r]);
            acc += mulmod(t.c, s % p_);
        }
        return acc % p_;
    }

    template <class Visit>
    void for_each_choice(std::uint64_t base, Visit&& visit) {
        const std::uint64_t target = (p_ - base) % p_;
        if (c01_ != 0) {
            const std::uint64_t inv = inverse(c01_);
            for (std::uint64_t a = 0; a < p_; ++a) {
                const std::uint64_t rest = (target + p_ - mulmod(c10_, a)) % p_;
                visit(a, mulmod(rest, inv));
            }
        } else if (c10_ != 0) {
            const std::uint64_t inv = inverse(c10_);
            for (std::uint64_t b = 0; b < p_; ++b) visit(mulmod(target, inv), b);
        } else if (target == 0) {
            for (std::uint64_t a = 0; a < p_; ++a) {
                for (std::uint64_t b = 0; b < p_; ++b) visit(a, b);
            }
        }
    }

    std::uint64_t choice_count(std::uint64_t base) const {
        if (c01_ != 0 || c10_ != 0) return p_;
        return base == 0 ? p_ * p_ : 0;
    }

    std::uint64_t descend(int level) {
        extend_powers(level);
        const std::uint64_t base = nonlinear_coefficient(level);
        if (level == k_ - 1) return choice_count(base);
        std::uint64_t total = 0;
        for_each_choice(base, [&](std::uint64_t a, std::uint64_t b) {
            set_level(level, a, b);
            total += descend(level + 1);
        });
        return total;
    }

    std::uint64_t inverse(std::uint64_t x) const {
        std::uint64_t result = 1, base = x % p_, e = p_ - 2;
        while (e > 0) {
            if (e & 1u) result = mulmod(result, base);
            base = mulmod(base, base);
            e >>= 1u;
        }
        return result;
    }

    std::vector<ModTerm> terms_;
    std::uint64_t p_;
    int k_;
    std::uint64_t c10_ = 0, c01_ = 0;
    int max_x_ = 1, max_y_ = 1;
    std::vector<std::vector<std::uint64_t>> px_, py_;
    std::vector<std::uint64_t> a_, b_;
};

inline void check_arguments(long p, int k, std::uint64_t budget) {
    if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not a prime");
    if (p > 65521) throw Error(ErrorCode::InvalidArgument, "prime too large for enumeration");
    if (k < 2) throw Error(ErrorCode::InvalidArgument, "jet order must be at least 2");
    // p^(2(k-1)) candidates, compared without overflow.
    long double candidates = 1;
    for (int i = 0; i < 2 * (k - 1); ++i) candidates *= static_cast<long double>(p);
    if (candidates > static_cast<long double>(budget)) {
        throw Error(ErrorCode::BudgetExceeded, "p=" + std::to_string(p) + ", k=" + std::to_string(k) +
                                                  " needs more than " + std::to_string(budget) + " candidates");
    }
}

} // namespace detail

/// Number of smooth punctual k-jets on {f = 0} over F_p. `jobs` workers
/// split the linear parts (a1, b1); the total does not depend on `jobs`.
inline std::uint64_t count_smooth_jets(const CurvePoly& f, long p, int k, unsigned jobs = 1,
                                       std::uint64_t budget = default_jet_budget) {
    detail::check_arguments(p, k, budget);
    auto terms = detail::reduce_mod(f, p);
    const auto up = static_cast<std::uint64_t>(p);
    const auto choices = detail::JetCounter(terms, up, k).first_level_choices();
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(choices.size())));

    std::vector<std::uint64_t> partial(jobs, 0);
    auto work = [&](unsigned w) {
        detail::JetCounter counter(terms, up, k);
        for (std::size_t i = w; i < choices.size(); i += jobs) {
            partial[w] += counter.count_from(choices[i].first, choices[i].second);
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    std::uint64_t total = 0;
    for (auto c : partial) total += c;
    return total;
}

/// H_k(p)·(p − 1)·p^(k−2).
inline Integer predicted_jet_count(const LaurentPoly& h_k, long p, int k) {
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k - 2));
    return point_count(h_k, p) * (p - 1) * power;
}

/// One report per (prime, k) with 2 ≤ k ≤ k_max, primes in the given order.
inline std::vector<JetCountReport> verify(const CurvePoly& f, const HilbTable& table, const std::vector<long>& primes,
                                          int k_max, unsigned jobs = 1, std::uint64_t budget = default_jet_budget) {
    if (k_max > table.k_max()) throw Error(ErrorCode::InvalidArgument, "table shorter than k_max");
    std::vector<JetCountReport> out;
    for (long p : primes) {
        for (int k = 2; k <= k_max; ++k) {
            JetCountReport r;
            r.prime = p;
            r.k = k;
            r.raw_count = Integer(std::to_string(count_smooth_jets(f, p, k, jobs, budget)));
            r.predicted = predicted_jet_count(table[k], p, k);
            r.match = r.raw_count == r.predicted;
            out.push_back(std::move(r));
        }
    }
    return out;
}

/// How the mismatches are spread: none, at some primes, at every prime.
enum class VerifyVerdict { all_match, partial_mismatch, total_mismatch };

inline VerifyVerdict assess(const std::vector<JetCountReport>& reports) {
    std::vector<long> primes, bad;
    for (const auto& r : reports) {
        if (std::find(primes.begin(), primes.end(), r.prime) == primes.end()) primes.push_back(r.prime);
        if (!r.match && std::find(bad.begin(), bad.end(), r.prime) == bad.end()) bad.push_back(r.prime);
    }
    if (bad.empty()) return VerifyVerdict::all_match;
    return bad.size() == primes.size() ? VerifyVerdict::total_mismatch : VerifyVerdict::partial_mismatch;
}

} // namespace curvilinear
