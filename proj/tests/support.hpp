#pragma once

#include <random>
#include <string>

#include <catch_amalgamated.hpp>

#include "curvilinear/curvilinear.hpp"

namespace Catch {
template <>
struct StringMaker<curvilinear::LaurentPoly> {
    static std::string convert(const curvilinear::LaurentPoly& p) { return curvilinear::to_string(p); }
};
template <>
struct StringMaker<curvilinear::BiPoly> {
    static std::string convert(const curvilinear::BiPoly& p) { return curvilinear::to_string(p); }
};
template <>
struct StringMaker<curvilinear::FactoredRational> {
    static std::string convert(const curvilinear::FactoredRational& r) { return curvilinear::to_string(r); }
};
template <>
struct StringMaker<curvilinear::QPoly2> {
    static std::string convert(const curvilinear::QPoly2& p) { return curvilinear::to_string(p); }
};
template <>
struct StringMaker<curvilinear::Integer> {
    static std::string convert(const curvilinear::Integer& v) { return v.get_str(); }
};
} // namespace Catch

namespace testing {

using namespace curvilinear;

inline auto has_code(ErrorCode code) {
    return Catch::Matchers::Predicate<Error>([code](const Error& e) { return e.code() == code; },
                                             "error code " + std::string(code_name(code)));
}

inline LaurentPoly lp(const char* text) { return parse_laurent(text); }
inline BiPoly bp(const char* text) { return parse_bipoly(text); }
inline FactoredRational fr(const char* text) { return parse_rational(text); }

inline ResolutionData resolved(const char* curve) { return resolve(parse_curve(curve)); }

/// Small random polynomials with a fixed seed per test.
class RandomPolys {
public:
    explicit RandomPolys(unsigned seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    LaurentPoly laurent(int lo = -3, int hi = 4, int terms = 4) {
        LaurentPoly p;
        for (int i = 0; i < terms; ++i) p += LaurentPoly::monomial(uniform(lo, hi), uniform(-9, 9));
        return p;
    }

    BiPoly bipoly(int terms = 4) {
        BiPoly p;
        for (int i = 0; i < terms; ++i) p += bi_monomial(uniform(-3, 3), uniform(0, 3), uniform(-9, 9));
        return p;
    }

    /// Factor whose T^0 part is ±L^a, so it inverts as a power series.
    BiPoly unit_factor() {
        BiPoly p = bi_monomial(uniform(-2, 2), 0, uniform(0, 1) ? 1 : -1);
        for (int i = 0; i < 2; ++i) p += bi_monomial(uniform(-2, 2), uniform(1, 3), uniform(-3, 3));
        return p;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

} // namespace testing

#define CHECK_THROWS_CODE(expr, code) CHECK_THROWS_MATCHES(expr, curvilinear::Error, testing::has_code(code))
#define REQUIRE_THROWS_CODE(expr, code) REQUIRE_THROWS_MATCHES(expr, curvilinear::Error, testing::has_code(code))
