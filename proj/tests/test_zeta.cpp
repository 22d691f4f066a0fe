#include <map>

#include "support.hpp"

using namespace testing;

namespace {

const std::vector<const char*> golden{"x",         "y - x^2", "y^2 - x^3", "y^2 - x^5",
                                      "x^2 - y^5", "y^3 - x^4", "x*y",     "(y^2 - x^3)*x"};

const std::vector<const char*> wider{"y^3 - x^5", "y^2 - x^7",   "y^4 - x^6",        "x*y*(x - y)",
                                     "y^3 - x^7", "y*(y - x^2)", "y^2 - x^2 - x^3", "(x^2 - y^3)(x^3 - y^2)",
                                     "y^2 - 9x^2 - x^3"};

std::vector<LaurentPoly> classes(std::initializer_list<const char*> texts) {
    std::vector<LaurentPoly> out;
    for (const char* t : texts) out.push_back(lp(t));
    return out;
}

} // namespace

TEST_CASE("Denef zeta of the cusp", "[zeta]") {
    CHECK(rat_eq(denef_zeta(resolved("y^2 - x^3")), fr("(L^-1 - L^-2)*(T^2*L^-1 + T^3*L^-2)")));
}

TEST_CASE("Denef zeta of the line", "[zeta]") {
    // (L - 1)/(L^2 L^(s+1)) * (L^(s+2) - 1)/(L (L^(s+1) - 1)) with L^s = 1/T
    const FactoredRational closed = fr("(L - 1)*T*(L^2 - T) / (L^4*(L - T))");
    CHECK(rat_eq(denef_zeta(resolved("x")), closed));
    CHECK(rat_eq(closed, fr("(L-1)/(L^3/T) * ((L^2/T) - 1)/(L*((L/T) - 1))")));
}

TEST_CASE("empty order-one set gives zero", "[zeta]") {
    ResolutionData res;
    res.divisors.push_back(Divisor{.id = 1, .N = 4, .nu = 3, .m = 2, .neighbors = {}, .strict_meets = 1,
                                   .class_open = {}, .class_strict = {}});
    CHECK(order_one_set(res).empty());
    CHECK(denef_zeta(res).is_zero());
}

TEST_CASE("Hilbert classes from the recursion", "[zeta]") {
    const HilbTable cusp = hilb_recursion(resolved("y^2 - x^3"), 6);
    CHECK(cusp.classes() == classes({"L + 1", "L", "0", "0", "0"}));
    CHECK(cusp.threshold() == 3);
    CHECK(cusp.k_max() == 6);

    const HilbTable line = hilb_recursion(resolved("x"), 5);
    CHECK(line.classes() == classes({"1", "1", "1", "1"}));
    CHECK_FALSE(line.threshold());

    const HilbTable a4 = hilb_recursion(resolved("x^2 - y^5"), 7);
    CHECK(a4.classes() == classes({"L + 1", "L", "L^2", "L^2", "0", "0"}));
    CHECK(a4.threshold() == 5);
}

TEST_CASE("golden tables, checked against jet counts in test_jets", "[zeta]") {
    const std::map<std::string, std::vector<LaurentPoly>> expected{
        {"x", classes({"1", "1", "1", "1", "1", "1", "1"})},
        {"y - x^2", classes({"1", "1", "1", "1", "1", "1", "1"})},
        {"y^2 - x^3", classes({"L + 1", "L", "0", "0", "0", "0", "0"})},
        {"y^2 - x^5", classes({"L + 1", "L", "L^2", "L^2", "0", "0", "0"})},
        {"x^2 - y^5", classes({"L + 1", "L", "L^2", "L^2", "0", "0", "0"})},
        {"y^3 - x^4", classes({"L + 1", "L^2 + L", "L^2", "0", "0", "0", "0"})},
        {"x*y", classes({"L + 1", "2*L", "2*L", "2*L", "2*L", "2*L", "2*L"})},
        {"(y^2 - x^3)*x", classes({"L + 1", "L^2 + L", "2*L^2", "L^2", "L^2", "L^2", "L^2"})},
    };
    for (const auto& [curve, table] : expected) {
        CAPTURE(curve);
        CHECK(hilb_recursion(resolved(curve.c_str()), 8).classes() == table);
    }
}

TEST_CASE("closed-form generating series", "[zeta]") {
    CHECK(rat_eq(q_series_closed(resolved("x")), fr("T^2/(1 - T)")));
    CHECK(rat_eq(q_series_closed(resolved("y^2 - x^3")), fr("(L + 1)*T^2 + L*T^3")));
    CHECK(rat_eq(q_series_closed(resolved("x*y")), fr("((L + 1)*T^2 + (L - 1)*T^3)/(1 - T)")));
}

TEST_CASE("zeta from a generating series", "[zeta]") {
    CHECK(rat_eq(igusa_from_Q(fr("T^2/(1 - T)"), 2), denef_zeta(resolved("x"))));
    CHECK(rat_eq(igusa_from_Q(fr("(L + 1)*T^2 + L*T^3"), 2), denef_zeta(resolved("y^2 - x^3"))));
    for (int n : {2, 3, 4}) {
        CAPTURE(n);
        CHECK(rat_eq(igusa_from_Q(FactoredRational(), n), FactoredRational(zeta_constant_term(n))));
    }
    CHECK(zeta_constant_term(2) == bp("L^-2*T - L^-4*T"));
    CHECK(zeta_constant_term(2, ConstantTerm::verbatim) == bp("L^-4*T - L^-6*T"));
}

TEST_CASE("coefficient-wise division recovers the cusp classes", "[zeta][series]") {
    // Z = c + (L - 1)/L^2 (1 - 1/T) Q(T/L), so with z_k the T^k coefficients,
    //   H_2 = -(z_1 - c_1) L^4/(L - 1),  H_{k+1} = L^(k+1) (H_k L^-k - (z_k - c_k) L^2/(L - 1)).
    const SeriesT z = expand_series(denef_zeta(resolved("y^2 - x^3")), 4);
    const BiPoly c = zeta_constant_term(2);
    auto over_l_minus_1 = [](const LaurentPoly& p) {
        const auto q = divide_exact(p, lp("L - 1"));
        REQUIRE(q);
        return *q;
    };
    std::vector<LaurentPoly> h{-over_l_minus_1((z[1] - t_coefficient(c, 1)) * lefschetz(4))};
    for (int k = 2; k < 4; ++k) {
        const LaurentPoly step = over_l_minus_1((z[k] - t_coefficient(c, k)) * lefschetz(2));
        h.push_back(lefschetz(k + 1) * (h.back() * lefschetz(-k) - step));
    }
    CHECK(h == classes({"L + 1", "L", "0"}));
}

TEST_CASE("thresholds", "[zeta]") {
    CHECK(threshold(resolved("y^2 - x^3"), false) == 3);
    CHECK(threshold(resolved("x^2 - y^5"), false) == 5);
    CHECK_FALSE(threshold(resolved("x"), true));
    CHECK(hilb_recursion(resolved("y^3 - x^4"), 4).threshold() == 4);
}

TEST_CASE("cross-route identity", "[zeta][property]") {
    std::vector<const char*> all = golden;
    all.insert(all.end(), wider.begin(), wider.end());
    for (const char* curve : all) {
        CAPTURE(curve);
        const CrossRouteResult r = cross_route_check(resolved(curve), 8);
        CHECK(r.zeta_match);
        CHECK(r.coefficient_match);
        CHECK_FALSE(r.expansion_error);
    }
}

TEST_CASE("verbatim constant term breaks the line", "[zeta]") {
    const ResolutionData line = resolved("x");
    const CrossRouteResult verbatim = cross_route_check(line, 8, ConstantTerm::verbatim);
    CHECK_FALSE(verbatim.coefficient_match);
    CHECK_FALSE(rat_eq(igusa_from_Q(fr("T^2/(1 - T)"), 2, ConstantTerm::verbatim), denef_zeta(line)));
    CHECK(cross_route_check(line, 8).coefficient_match);
}

TEST_CASE("threshold consistency and polynomiality", "[zeta][property]") {
    std::vector<const char*> all = golden;
    all.insert(all.end(), wider.begin(), wider.end());
    for (const char* curve : all) {
        CAPTURE(curve);
        const HilbTable table = hilb_recursion(resolved(curve), 10);
        for (int k = 2; k <= 10; ++k) {
            CAPTURE(k);
            const LaurentPoly& h = table[k];
            if (h.is_zero()) continue;
            CHECK(min_exponent(h) >= 0);
            CHECK(h.terms().begin()->second > 0);
        }
        if (const auto n = table.threshold()) {
            REQUIRE(*n <= 10);
            CHECK_FALSE(table[*n].is_zero());
            for (int k = *n + 1; k <= 10; ++k) CHECK(table[k].is_zero());
        }
    }
}

TEST_CASE("smooth curves all have the same series", "[zeta][property]") {
    for (const char* curve : {"x", "y - x^2", "x + y^2", "y - x^3 + x*y^2", "2x - 3y + x^2*y", "x - y^7"}) {
        CAPTURE(curve);
        const ResolutionData res = resolved(curve);
        REQUIRE(*res.origin_mult == 1);
        const HilbTable table = hilb_recursion(res, 9);
        for (const auto& h : table.classes()) CHECK(h == LaurentPoly(1));
        CHECK(rat_eq(q_series_closed(res), fr("T^2/(1 - T)")));
    }
}

TEST_CASE("k_max below 2 is refused", "[zeta][errors]") {
    CHECK_THROWS_CODE(hilb_recursion(resolved("x"), 1), ErrorCode::InvalidArgument);
}
