#include <doctest.h>

#include "fixtures.hpp"
#include "fwe/rh.hpp"
#include "fwe/zeta.hpp"

using namespace fwe;
using namespace fwe::fixtures;

namespace {

// Expands a product of factors given by ascending coefficient literals.
UniPoly pfactored(const char* scale,
                  std::initializer_list<std::initializer_list<const char*>> factors) {
    UniPoly acc = UniPoly::constant(qx(scale), "T");
    for (const auto& f : factors) {
        std::vector<ExactNumber> c;
        for (const char* s : f) c.push_back(qx(s));
        acc = acc * UniPoly(std::move(c), "T");
    }
    return acc;
}

}  // namespace

TEST_CASE("zeta polynomials of the basic examples") {
    SUBCASE("phi4 at q=2") {
        ZetaResult z = zeta_poly(phi4(), ExactNumber(2));
        CHECK(z.P == pfactored("1", {{"-1", "0", "2"}}));
        CHECK(z.two_g == 2);
        CHECK(z.klass == SymClass::anti_invariant);
        CHECK(z.P.degree() == z.two_g);
    }
    SUBCASE("phi3 at q=4") {
        ZetaResult z = zeta_poly(phi3(), ExactNumber(4));
        CHECK(z.P == pfactored("1", {{"-1", "2"}}));
        CHECK(z.two_g == 1);
    }
    SUBCASE("degree-two invariants have constant P = 1") {
        for (const char* s : {"2", "4/3", "4+2*sqrt(2)"}) {
            ZetaResult z = zeta_poly(w2(qx(s)), qx(s));
            CHECK(z.P == UniPoly::constant(ExactNumber(1), "T"));
            CHECK(z.two_g == 0);
            CHECK(z.klass == SymClass::invariant);
        }
    }
    SUBCASE("preconditions") {
        HomogPoly d1(2, {ExactNumber(1), ExactNumber(-2), ExactNumber(1)});
        CHECK_THROWS_AS(zeta_poly(d1, ExactNumber(2)), std::domain_error);
        CHECK_THROWS_AS(zeta_poly(phi4(), ExactNumber(1)), std::domain_error);
    }
}

TEST_CASE("genus") {
    CHECK(genus_two_g(phi4()) == 2);
    CHECK(genus_two_g(phi3()) == 1);
    CHECK(genus_two_g(w2(ExactNumber(2))) == 0);
    CHECK(genus_two_g(w12()) == 6);
    CHECK(genus_two_g(extremal24()) == 18);
    // d = 6 > n/2 + 1 = 4 violates the nonnegative-genus bound.
    HomogPoly bad(6, {ExactNumber(1), ExactNumber(0), ExactNumber(0), ExactNumber(0), ExactNumber(0),
                      ExactNumber(0), ExactNumber(1)});
    CHECK_THROWS_AS(genus_two_g(bad), std::domain_error);
}

TEST_CASE("zeta regression against the printed (W, P) pairs") {
    ExactNumber two(2), four(4), four_thirds(Rational(4, 3));

    SUBCASE("the q=2 ring") {
        CHECK(zeta_poly(phi4(), two).P == pfactored("1", {{"-1", "0", "2"}}));
        CHECK(zeta_poly(w2(two) * phi4(), two).P ==
              pfactored("1/3", {{"-1", "0", "2"}, {"1", "0", "2"}}));
        CHECK(zeta_poly(w2(two).pow(2) * phi4(), two).P ==
              pfactored("1/7", {{"-1", "0", "2"}, {"1", "0", "2", "0", "4"}}));
        CHECK(zeta_poly(w2(two).pow(3) * phi4(), two).P ==
              pfactored("1/15",
                        {{"-1", "0", "2"}, {"1", "0", "2"}, {"1", "2", "2"}, {"1", "-2", "2"}}));
        CHECK(zeta_poly(w12(), two).P ==
              pfactored("1/15", {{"-1", "0", "2"}, {"1", "0", "2"}, {"1", "2", "2"}}));
    }
    SUBCASE("the q=4 ring") {
        CHECK(zeta_poly(phi3(), four).P == pfactored("1", {{"-1", "2"}}));
        CHECK(zeta_poly(w2(four) * phi3(), four).P == pfactored("1/5", {{"-1", "2"}, {"1", "0", "4"}}));
        CHECK(zeta_poly(w2(four).pow(2) * phi3(), four).P ==
              pfactored("1/21", {{"-1", "2"}, {"1", "-2", "4"}, {"1", "2", "4"}}));
        CHECK(zeta_poly(w2(four).pow(3) * phi3(), four).P ==
              pfactored("1/7", {{"-1", "2"}, {"1", "2", "4"}}));
        HomogPoly w11 = homog_combine({{qx("8/9"), {w2(four).pow(4), phi3()}},
                                       {qx("1/9"), {w2(four), phi3().pow(3)}}});
        CHECK(w11 == even_support(11, {"1", "0", "-30", "-336", "-1035", "-648"}));
        CHECK(zeta_poly(w11, four).P ==
              pfactored("1/33", {{"-1", "2"}, {"1", "2", "6", "8", "16"}}));
    }
    SUBCASE("the q=4/3 ring") {
        CHECK(zeta_poly(phi6(), four_thirds).P ==
              pfactored("1/9", {{"-3", "0", "4"}, {"3", "2", "4"}}));
        CHECK(zeta_poly(w2(four_thirds) * phi6(), four_thirds).P ==
              pfactored("1/54", {{"-3", "0", "4"}, {"9", "6", "15", "8", "16"}}));
        ZetaResult inv = zeta_poly(w2(four_thirds).pow(2), four_thirds);
        CHECK(inv.P == pfactored("1/9", {{"3", "2", "4"}}));
        CHECK(inv.klass == SymClass::invariant);
        CHECK(functional_eq_check(inv, four_thirds));
    }
    SUBCASE("phi5") {
        // The Definition-4.1 normalization forces P(0) = -1 here (the
        // coefficient of x^3 y^2 T^3 gives 10 p_0 = A_2/(q-1) = -10), so the
        // leading scalar of the factored form is (sqrt(5)-2)/4.
        ZetaResult z = zeta_poly(phi5(), qx("6-2*sqrt(5)"));
        CHECK(z.P == pfactored("-1/2+1/4*sqrt(5)",
                               {{"-1-sqrt(5)", "4"}, {"3+sqrt(5)", "4*sqrt(5)", "8"}}));
        CHECK(z.two_g == 3);
        CHECK(functional_eq_check(z, qx("6-2*sqrt(5)"), qx("-1+sqrt(5)")));
    }
}

TEST_CASE("functional equation") {
    SUBCASE("worked identities") {
        ZetaResult a{pfactored("1", {{"-1", "0", "2"}}), 2, SymClass::anti_invariant};
        CHECK(functional_eq_check(a, ExactNumber(2)));
        ZetaResult b{pfactored("1", {{"-1", "2"}}), 1, SymClass::anti_invariant};
        CHECK(functional_eq_check(b, ExactNumber(4), ExactNumber(2)));
        ZetaResult c{pfactored("1", {{"1", "0", "1"}}), 2, SymClass::anti_invariant};
        CHECK(!functional_eq_check(c, ExactNumber(2)));
        CHECK_THROWS_AS(functional_eq_check(b, ExactNumber(4)), FieldMismatchError);
    }
    SUBCASE("every constructed zeta polynomial satisfies it") {
        struct Case {
            HomogPoly w;
            const char* q;
        };
        std::vector<Case> cases = {{phi4(), "2"},          {phi6(), "4/3"},
                                   {phi8plus(), "4+2*sqrt(2)"},  {phi8minus(), "4-2*sqrt(2)"},
                                   {phi10plus(), "2+2/5*sqrt(5)"}, {phi10minus(), "2-2/5*sqrt(5)"},
                                   {phi12plus(), "8+4*sqrt(3)"},   {phi12minus(), "8-4*sqrt(3)"},
                                   {phi3(), "4"},          {phi5(), "6-2*sqrt(5)"},
                                   {w12(), "2"},           {extremal24(), "4+2*sqrt(2)"}};
        for (const auto& c : cases) {
            ExactNumber q = qx(c.q);
            ZetaResult z = zeta_poly(c.w, q);
            CHECK(z.klass == SymClass::anti_invariant);
            CHECK(z.P.degree() == z.two_g);
            CHECK(functional_eq_check(z, q, sqrt_in_field(q)));
        }
    }
}

TEST_CASE("Riemann hypothesis verdicts") {
    SUBCASE("phi4: exact Sturm path holds") {
        ZetaResult z = zeta_poly(phi4(), ExactNumber(2));
        auto exact = rh_check_exact(z, ExactNumber(2));
        REQUIRE(exact.has_value());
        CHECK(exact->status == RhStatus::holds);
        CHECK(exact->method == RhMethod::exact_sturm);
        RHVerdict numeric = rh_check_numeric(z, ExactNumber(2));
        CHECK(numeric.status == RhStatus::holds);
    }
    SUBCASE("phi5: exact path within Q(sqrt(5))") {
        ExactNumber q = qx("6-2*sqrt(5)");
        ZetaResult z = zeta_poly(phi5(), q);
        auto exact = rh_check_exact(z, q);
        REQUIRE(exact.has_value());
        CHECK(exact->status == RhStatus::holds);
        CHECK(rh_check(z, q).method == RhMethod::exact_sturm);
    }
    SUBCASE("phi8+: fails with certified witnesses") {
        ExactNumber q = qx("4+2*sqrt(2)");
        ZetaResult z = zeta_poly(phi8plus(), q);
        CHECK(!rh_check_exact(z, q).has_value());  // sqrt(q) has degree 4
        RHVerdict v = rh_check(z, q);
        CHECK(v.status == RhStatus::fails);
        CHECK(!v.witnesses.empty());
        CHECK(v.method == RhMethod::ivt_witness);  // real roots off the circle
    }
    SUBCASE("phi8-: holds numerically at default tolerance") {
        ExactNumber q = qx("4-2*sqrt(2)");
        RHVerdict v = rh_check(zeta_poly(phi8minus(), q), q);
        CHECK(v.status == RhStatus::holds);
        CHECK(v.method == RhMethod::numeric_certified);
    }
    SUBCASE("a synthetic functional-equation polynomial failing the RH exactly") {
        // P = T^3 - 2T^2 + T - 1/8 has Q(u) = (u-1)(u^2-3u+1): real roots
        // (3 +- sqrt(5))/2 off the unit circle.
        UniPoly P({qx("-1/8"), qx("1"), qx("-2"), qx("1")}, "T");
        ZetaResult z{P, 3, SymClass::anti_invariant};
        CHECK(functional_eq_check(z, ExactNumber(4), ExactNumber(2)));
        auto exact = rh_check_exact(z, ExactNumber(4));
        REQUIRE(exact.has_value());
        CHECK(exact->status == RhStatus::fails);
        CHECK(!exact->witnesses.empty());
        RHVerdict numeric = rh_check_numeric(z, ExactNumber(4));
        CHECK(numeric.status == RhStatus::fails);
    }
    SUBCASE("constant P holds vacuously") {
        ZetaResult z = zeta_poly(w2(ExactNumber(2)), ExactNumber(2));
        CHECK(rh_check(z, ExactNumber(2)).status == RhStatus::holds);
    }
    SUBCASE("zero constant coefficient is an instant exact failure") {
        ZetaResult z{UniPoly({qx("0"), qx("1"), qx("1")}, "T"), 2, SymClass::anti_invariant};
        RHVerdict v = rh_check(z, ExactNumber(2));
        CHECK(v.status == RhStatus::fails);
        REQUIRE(!v.witnesses.empty());
        CHECK(v.witnesses[0].lo == Rational(0));
    }
}

TEST_CASE("reciprocal transform preserves the verdict") {
    // q^g T^(2g) P(1/(qT)) has coefficients p~_j = p_(2g-j) q^(j-g); for a
    // functional-equation P this is -+P, and the verdict must not change.
    ExactNumber q(2);
    for (const HomogPoly& w : {w2(q).pow(3) * phi4(), w12()}) {
        ZetaResult z = zeta_poly(w, q);
        long g = z.two_g / 2;
        std::vector<ExactNumber> rc(static_cast<std::size_t>(z.two_g) + 1, ExactNumber(0));
        for (long j = 0; j <= z.two_g; ++j)
            rc[static_cast<std::size_t>(j)] =
                z.P[static_cast<std::size_t>(z.two_g - j)] * q.pow(j - g);
        ZetaResult zr{UniPoly(rc, "T"), z.two_g, z.klass};
        CHECK(rh_check(z, q).status == rh_check(zr, q).status);
    }
}

TEST_CASE("exact and numeric paths agree wherever both run") {
    struct Case {
        HomogPoly w;
        const char* q;
    };
    std::vector<Case> cases = {{phi4(), "2"},
                               {w2(ExactNumber(2)) * phi4(), "2"},
                               {w12(), "2"},
                               {phi3(), "4"},
                               {w2(ExactNumber(4)).pow(3) * phi3(), "4"},
                               {phi6(), "4/3"},
                               {w2(ExactNumber(Rational(4, 3))).pow(2), "4/3"},
                               {phi5(), "6-2*sqrt(5)"}};
    for (const auto& c : cases) {
        ExactNumber q = qx(c.q);
        ZetaResult z = zeta_poly(c.w, q);
        auto exact = rh_check_exact(z, q);
        REQUIRE(exact.has_value());
        RHVerdict numeric = rh_check_numeric(z, q);
        CHECK(exact->status == numeric.status);
    }
}
