#include <doctest.h>

#include "fixtures.hpp"
#include "fwe/realroots.hpp"

using namespace fwe;
using namespace fwe::fixtures;

namespace {

UniPoly upoly(std::initializer_list<long> coeffs, const char* var = "q") {
    std::vector<ExactNumber> c;
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly(std::move(c), var);
}

}  // namespace

TEST_CASE("gcd and squarefree decomposition") {
    UniPoly a = upoly({-2, 1}) * upoly({-3, 1});
    UniPoly b = upoly({-2, 1}) * upoly({5, 1});
    CHECK(poly_gcd(a, b) == upoly({-2, 1}));

    UniPoly f = upoly({-1, 1}) * upoly({-2, 1}).pow(2) * upoly({-3, 1}).pow(3);
    auto parts = squarefree_decomposition(f);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == upoly({-1, 1}));
    CHECK(parts[1] == upoly({-2, 1}));
    CHECK(parts[2] == upoly({-3, 1}));

    CHECK(squarefree_decomposition(upoly({-2, 1})).size() == 1);
}

TEST_CASE("Sturm counting") {
    // (q-1)(q-2)(q-4): three real roots
    UniPoly f = upoly({-1, 1}) * upoly({-2, 1}) * upoly({-4, 1});
    SturmChain chain(f);
    CHECK(chain.count_all() == 3);
    CHECK(chain.count(ExactNumber(0), ExactNumber(3)) == 2);
    CHECK(chain.count(ExactNumber(Rational(3, 2)), ExactNumber(10)) == 2);
    CHECK(chain.count(ExactNumber(0), ExactNumber(2)) == 2);  // half-open: q=2 counted
    CHECK(chain.count(ExactNumber(2), ExactNumber(10)) == 1);

    // q^2+1: no real roots
    CHECK(SturmChain(upoly({1, 0, 1})).count_all() == 0);

    // q^2-8q+8 over Q(sqrt(2)) endpoints
    SturmChain c2(upoly({8, -8, 1}));
    CHECK(c2.count_all() == 2);
    CHECK(c2.count(ExactNumber(0), qx("4+2*sqrt(2)")) == 2);  // right endpoint is a root
}

TEST_CASE("root isolation") {
    UniPoly f = upoly({8, -8, 1});  // roots 4 +- 2 sqrt(2)
    auto roots = isolate_real_roots(f, 80);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].hi < roots[1].lo);
    // 4-2*sqrt(2) = 1.17157..., 4+2*sqrt(2) = 6.82842...
    CHECK(roots[0].lo < Rational(117158, 100000));
    CHECK(roots[0].hi > Rational(117157, 100000));
    CHECK(roots[1].hi - roots[1].lo <= Rational(1, 2).pow(80));

    SUBCASE("exact rational roots become point brackets") {
        auto r = isolate_real_roots(upoly({-1, 0, 2}), 64);  // 2q^2-1
        REQUIRE(r.size() == 2);
        for (const auto& b : r)
            if (!b.exact()) CHECK(b.hi - b.lo <= Rational(1, 2).pow(64));
    }
}

TEST_CASE("simplest rational in an interval") {
    CHECK(simplest_rational_in(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
    CHECK(simplest_rational_in(Rational(-1, 2), Rational(1, 3)) == Rational(0));
    CHECK(simplest_rational_in(Rational(7, 5), Rational(10, 7)) == Rational(7, 5));
    CHECK(simplest_rational_in(Rational(13, 9), Rational(29, 20)) == Rational(13, 9));
    CHECK(simplest_rational_in(Rational(4, 3), Rational(4, 3)) == Rational(4, 3));
    CHECK(simplest_rational_in(Rational(-5, 2), Rational(-7, 3)) == Rational(-5, 2));
    CHECK(simplest_rational_in(Rational(5, 2), Rational(7, 2)) == Rational(3));
}

TEST_CASE("factorization certified by exact division") {
    SUBCASE("linear and rational content") {
        // 8(q-2)
        FactorList f = factor_rational_poly(upoly({-16, 8}));
        CHECK(f.content == Rational(8));
        REQUIRE(f.factors.size() == 1);
        CHECK(f.factors[0].first == upoly({-2, 1}));
        CHECK(f.factors[0].second == 1);
    }
    SUBCASE("multiplicities") {
        UniPoly f = upoly({-2, 1}).pow(2) * upoly({-4, 3});
        FactorList fl = factor_rational_poly(f);
        REQUIRE(fl.factors.size() == 2);
        CHECK(fl.factors[0].first == upoly({-4, 3}));
        CHECK(fl.factors[0].second == 1);
        CHECK(fl.factors[1].first == upoly({-2, 1}));
        CHECK(fl.factors[1].second == 2);
    }
    SUBCASE("quadratic recognition from conjugate pairs") {
        UniPoly f = upoly({8, -8, 1}) * upoly({16, -20, 5}) * upoly({-2, 1});
        FactorList fl = factor_rational_poly(f);
        REQUIRE(fl.factors.size() == 3);
        CHECK(fl.content == Rational(1));
        CHECK(fl.factors[0].first == upoly({-2, 1}));
        CHECK(fl.factors[1].first == upoly({16, -20, 5}));
        CHECK(fl.factors[2].first == upoly({8, -8, 1}));
    }
    SUBCASE("rational with fractional content") {
        UniPoly f = upoly({-4, 3}).scaled(ExactNumber(Rational(1, 27)));
        FactorList fl = factor_rational_poly(f);
        CHECK(fl.content == Rational(1, 27));
        CHECK(fl.factors[0].first == upoly({-4, 3}));
    }
    SUBCASE("degree >= 3 factors via subset reconstruction") {
        UniPoly c3 = upoly({-64, 112, -56, 7});
        UniPoly c4 = upoly({128, -256, 160, -32, 1});
        FactorList fl = factor_rational_poly(c3 * c4);
        REQUIRE(fl.factors.size() == 2);
        CHECK(fl.factors[0].first == c3);
        CHECK(fl.factors[1].first == c4);

        // with a quadratic and a linear mixed in
        FactorList fl2 = factor_rational_poly(c3 * upoly({8, -8, 1}) * upoly({-2, 1}));
        REQUIRE(fl2.factors.size() == 3);
        CHECK(fl2.factors[0].first == upoly({-2, 1}));
        CHECK(fl2.factors[1].first == upoly({8, -8, 1}));
        CHECK(fl2.factors[2].first == c3);
    }
    SUBCASE("irreducible quadratic with complex roots stays whole") {
        FactorList fl = factor_rational_poly(upoly({1, 1, 1}) * upoly({-2, 1}));
        REQUIRE(fl.factors.size() == 2);
        CHECK(fl.factors[0].first == upoly({-2, 1}));
        CHECK(fl.factors[1].first == upoly({1, 1, 1}));
    }
}
