#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "fwe/moments.hpp"
#include "fwe/realroots.hpp"

using namespace fwe;
using namespace fwe::fixtures;

namespace {

UniPoly upoly(std::initializer_list<long> coeffs, const char* var = "q") {
    std::vector<ExactNumber> c;
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly(std::move(c), var);
}

// Independent oracle: cofactor expansion along the first row.
UniPoly naive_det(const std::vector<std::vector<UniPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    UniPoly acc(m[0][0].var());
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<UniPoly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<UniPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        UniPoly term = m[0][j] * naive_det(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

CandidateQ make_candidate(const char* q_literal) {
    CandidateQ c;
    c.q = qx(q_literal);
    c.t = sqrt_in_field(c.q);
    return c;
}

CandidateQ make_odd_candidate(const char* t_literal) {
    CandidateQ c;
    c.t = qx(t_literal);
    c.q = *c.t * *c.t;
    return c;
}

bool has_candidate(const CandidateSearch& s, const char* literal, int multiplicity = 1) {
    ExactNumber v = qx(literal);
    for (const auto& c : s.candidates)
        if (c.q == v && c.multiplicity == multiplicity) return true;
    return false;
}

}  // namespace

TEST_CASE("moment matrices match the printed displays") {
    SUBCASE("A(1,q)") {
        MomentMatrix m = moment_matrix(1, Parity::even);
        CHECK(m.entries[0][0] == upoly({1, 1}));
        CHECK(m.entries[0][1] == upoly({1}));
        CHECK(m.entries[1][0] == upoly({4}));
        CHECK(m.entries[1][1].is_zero());
    }
    SUBCASE("A(2,q)") {
        MomentMatrix m = moment_matrix(2, Parity::even);
        CHECK(m.entries[0][0] == upoly({1, 0, 1}));
        CHECK(m.entries[1][0] == upoly({4, 4}));
        CHECK(m.entries[1][1] == upoly({2}));
        CHECK(m.entries[2][0] == upoly({12}));
        CHECK(m.entries[2][1] == upoly({2}));
        CHECK(m.entries[2][2].is_zero());
    }
    SUBCASE("A(3,q) including the interior q entry") {
        MomentMatrix m = moment_matrix(3, Parity::even);
        CHECK(m.entries[1][0] == upoly({6, 0, 6}));
        CHECK(m.entries[2][0] == upoly({15, 15}));
        CHECK(m.entries[2][1] == upoly({6, 1}));  // 6 + q
        CHECK(m.entries[3][0] == upoly({40}));
        CHECK(m.entries[3][1] == upoly({8}));
    }
    SUBCASE("A(4,q) row with 15+q^2 and 20+6q") {
        MomentMatrix m = moment_matrix(4, Parity::even);
        CHECK(m.entries[2][1] == upoly({15, 0, 1}));
        CHECK(m.entries[3][1] == upoly({20, 6}));
        CHECK(m.entries[4][0] == upoly({140}));
    }
    SUBCASE("B(1,q) and B(2,q) in t") {
        MomentMatrix b1 = moment_matrix(1, Parity::odd);
        CHECK(b1.entries[0][0] == upoly({1, 0, 0, 1}, "t"));
        CHECK(b1.entries[0][1] == upoly({1}, "t"));
        CHECK(b1.entries[1][0] == upoly({3, 3}, "t"));
        CHECK(b1.entries[1][1] == upoly({1}, "t"));

        MomentMatrix b2 = moment_matrix(2, Parity::odd);
        CHECK(b2.entries[0][0] == upoly({1, 0, 0, 0, 0, 1}, "t"));
        CHECK(b2.entries[1][0] == upoly({5, 0, 0, 5}, "t"));
        CHECK(b2.entries[1][1] == upoly({3}, "t"));
        CHECK(b2.entries[2][0] == upoly({10, 10}, "t"));
        CHECK(b2.entries[2][1] == upoly({3, 1}, "t"));
        CHECK(b2.entries[2][2].is_zero());
    }
}

TEST_CASE("determinants: fraction-free elimination against the oracle") {
    SUBCASE("published forms") {
        CHECK(poly_det(moment_matrix(1, Parity::even)) == upoly({-4}));
        CHECK(poly_det(moment_matrix(2, Parity::even)) == upoly({-16, 8}));  // 8(q-2)
        CHECK(poly_det(moment_matrix(3, Parity::even)) ==
              upoly({-2, 1}) * upoly({-4, 3}).scaled(ExactNumber(16)));
        CHECK(poly_det(moment_matrix(4, Parity::even)) ==
              (upoly({-2, 1}) * upoly({-4, 3}) * upoly({8, -8, 1})).scaled(ExactNumber(32)));
        CHECK(poly_det(moment_matrix(1, Parity::odd)) == upoly({-2, -3, 0, 1}, "t"));
        // -(t+1)^3 (t-2) (t^2+2t-4)
        CHECK(poly_det(moment_matrix(2, Parity::odd)) ==
              -(upoly({1, 1}, "t").pow(3) * upoly({-2, 1}, "t") * upoly({-4, 2, 1}, "t")));
    }
    SUBCASE("agrees with cofactor expansion on the moment matrices") {
        for (long n = 1; n <= 4; ++n) {
            CHECK(poly_det(moment_matrix(n, Parity::even)) ==
                  naive_det(moment_matrix(n, Parity::even).entries));
            CHECK(poly_det(moment_matrix(n, Parity::odd)) ==
                  naive_det(moment_matrix(n, Parity::odd).entries));
        }
    }
    SUBCASE("agrees with cofactor expansion on random integer polynomial matrices") {
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<long> coeff(-6, 6);
        for (int it = 0; it < 10; ++it) {
            std::vector<std::vector<UniPoly>> m(4, std::vector<UniPoly>(4, UniPoly("q")));
            for (auto& row : m)
                for (auto& cell : row)
                    cell = UniPoly({ExactNumber(coeff(rng)), ExactNumber(coeff(rng)),
                                    ExactNumber(coeff(rng))},
                                   "q");
            MomentMatrix wrapped{3, Parity::even, m};
            CHECK(poly_det(wrapped) == naive_det(m));
        }
    }
}

TEST_CASE("candidate recognition") {
    SUBCASE("|A(4,q)| yields 2, 4/3 and 4 +- 2 sqrt(2)") {
        CandidateSearch s = candidate_q(poly_det(moment_matrix(4, Parity::even)), Parity::even);
        CHECK(s.candidates.size() == 4);
        CHECK(s.unresolved.empty());
        CHECK(has_candidate(s, "2"));
        CHECK(has_candidate(s, "4/3"));
        CHECK(has_candidate(s, "4+2*sqrt(2)"));
        CHECK(has_candidate(s, "4-2*sqrt(2)"));
        for (const auto& c : s.candidates) {
            CHECK(c.minimal_polynomial.eval(c.q).is_zero());
            CHECK(c.minimal_polynomial.degree() <= 2);
        }
    }
    SUBCASE("|A(1,q)| = -4 is regular for all q") {
        CandidateSearch s = candidate_q(poly_det(moment_matrix(1, Parity::even)), Parity::even);
        CHECK(s.candidates.empty());
        CHECK(s.unresolved.empty());
    }
    SUBCASE("|A(6,q)| carries q=2 with multiplicity two") {
        CandidateSearch s = candidate_q(poly_det(moment_matrix(6, Parity::even)), Parity::even);
        CHECK(s.candidates.size() == 8);
        CHECK(has_candidate(s, "2", 2));
        CHECK(has_candidate(s, "2+2/5*sqrt(5)"));
        CHECK(has_candidate(s, "2-2/5*sqrt(5)"));
        CHECK(has_candidate(s, "8+4*sqrt(3)"));
        CHECK(has_candidate(s, "8-4*sqrt(3)"));
        CHECK(s.unresolved.empty());
    }
    SUBCASE("|B(2,q)|: roots t <= 0 discarded, q = t^2") {
        CandidateSearch s = candidate_q(poly_det(moment_matrix(2, Parity::odd)), Parity::odd);
        CHECK(s.candidates.size() == 2);
        CHECK(has_candidate(s, "4"));
        CHECK(has_candidate(s, "6-2*sqrt(5)"));
        for (const auto& c : s.candidates) REQUIRE(c.t.has_value());
        CHECK(s.candidates[0].t == qx("-1+sqrt(5)"));
        CHECK(s.candidates[1].t == qx("2"));
    }
    SUBCASE("|A(7,q)| surfaces the degree-3 factor verbatim") {
        CandidateSearch s = candidate_q(poly_det(moment_matrix(7, Parity::even)), Parity::even);
        REQUIRE(s.unresolved.size() == 1);
        CHECK(s.unresolved[0] == upoly({-64, 112, -56, 7}));
        CHECK(has_candidate(s, "2", 2));
    }
}

TEST_CASE("enumerator construction") {
    SUBCASE("phi4 from (2, even, q=2)") {
        auto ws = construct_enumerator(2, Parity::even, make_candidate("2"));
        REQUIRE(ws.size() == 1);
        CHECK(ws[0] == phi4());
    }
    SUBCASE("phi6 from (3, even, q=4/3)") {
        auto ws = construct_enumerator(3, Parity::even, make_candidate("4/3"));
        REQUIRE(ws.size() == 1);
        CHECK(ws[0] == phi6());
    }
    SUBCASE("phi8 pair") {
        auto plus = construct_enumerator(4, Parity::even, make_candidate("4+2*sqrt(2)"));
        REQUIRE(plus.size() == 1);
        CHECK(plus[0] == phi8plus());
        auto minus = construct_enumerator(4, Parity::even, make_candidate("4-2*sqrt(2)"));
        CHECK(minus[0] == phi8minus());
    }
    SUBCASE("phi3 and phi5 from the odd family") {
        auto w3 = construct_enumerator(1, Parity::odd, make_odd_candidate("2"));
        REQUIRE(w3.size() == 1);
        CHECK(w3[0] == phi3());
        auto w5 = construct_enumerator(2, Parity::odd, make_odd_candidate("-1+sqrt(5)"));
        REQUIRE(w5.size() == 1);
        CHECK(w5[0] == phi5());
    }
    SUBCASE("two-dimensional kernel at (6, even, q=2)") {
        auto ws = construct_enumerator(6, Parity::even, make_candidate("2"));
        CHECK(ws.size() == 2);
        for (const auto& w : ws) {
            CHECK(fwe_classify(w, ExactNumber(2)) == SymClass::anti_invariant);
            CHECK(w.degree() == 12);
            for (long i = 1; i <= 12; i += 2) CHECK(w.coeff(i).is_zero());
        }
    }
    SUBCASE("regular matrix rejects construction") {
        CHECK_THROWS_AS(construct_enumerator(1, Parity::even, make_candidate("2")),
                        std::invalid_argument);
    }
}

TEST_CASE("binomial-moment identities") {
    CHECK(moment_identity_check(phi4(), ExactNumber(2)));
    CHECK(!moment_identity_check(w2(ExactNumber(2)).pow(2), ExactNumber(2)));  // invariant, sign flips
    CHECK(moment_identity_check(phi3(), ExactNumber(4), ExactNumber(2)));
    CHECK(moment_identity_check(phi5(), qx("6-2*sqrt(5)"), qx("-1+sqrt(5)")));
    CHECK(moment_identity_check(phi12minus(), qx("8-4*sqrt(3)")));
    CHECK_THROWS_AS(moment_identity_check(phi3(), ExactNumber(4)), FieldMismatchError);

    SUBCASE("equations at nu and n-nu are proportional") {
        // coefficient vector of the identity at nu: C(n-i,nu) + q^(n/2-nu) C(n-i,n-nu)
        const long n = 6;
        ExactNumber q(Rational(4, 3));
        auto binom = [](long a, long b) -> ExactNumber {
            if (b < 0 || b > a) return ExactNumber(0);
            mpz_class r;
            mpz_bin_uiui(r.get_mpz_t(), (unsigned long)a, (unsigned long)b);
            return ExactNumber(Rational(r));
        };
        for (long nu = 0; nu <= n; ++nu) {
            long mu = n - nu;
            ExactNumber ratio = q.pow(n / 2 - mu);  // v_mu = ratio * v_nu expected (even n)
            for (long i = 0; i <= n; ++i) {
                ExactNumber v_nu = binom(n - i, nu) + q.pow(n / 2 - nu) * binom(n - i, n - nu);
                ExactNumber v_mu = binom(n - i, mu) + q.pow(n / 2 - mu) * binom(n - i, n - mu);
                CHECK(v_mu == ratio * v_nu);
            }
        }
    }
}

TEST_CASE("persistence of admissible q under degree growth") {
    // Once q0 works at n0 it works for all larger n: the witness is
    // W * W_{2,q0}^k, again anti-invariant.
    UniPoly det_var("q");
    for (long n = 2; n <= 8; ++n) {
        UniPoly d = poly_det(moment_matrix(n, Parity::even));
        CHECK(d.eval(ExactNumber(2)).is_zero());
    }
    HomogPoly w = phi4();
    for (long k = 1; k <= 6; ++k) {
        w = w * w2(ExactNumber(2));
        CHECK(fwe_classify(w, ExactNumber(2)) == SymClass::anti_invariant);
        CHECK(moment_identity_check(w, ExactNumber(2)));
    }
}
