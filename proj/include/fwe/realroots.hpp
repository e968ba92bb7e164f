#pragma once

#include <utility>
#include <vector>

#include "fwe/rational.hpp"
#include "fwe/unipoly.hpp"

namespace fwe {

/// Monic gcd over the coefficient field.
UniPoly poly_gcd(UniPoly a, UniPoly b);

/// Yun decomposition p = c * prod parts[k]^(k+1); parts are monic and
/// pairwise coprime (some may be constant 1).
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);

/// Signed-remainder Sturm chain; counts distinct real roots exactly.
class SturmChain {
public:
    explicit SturmChain(const UniPoly& p);

    /// Distinct real roots in (a, b], a < b; a must not be a root.
    long count(const ExactNumber& a, const ExactNumber& b) const;
    /// All distinct real roots.
    long count_all() const;

    long variations_at(const ExactNumber& x) const;
    long variations_at_infinity(int direction) const;  // +1 or -1

    /// Rational B with every real root strictly inside (-B, B).
    const Rational& cauchy_bound() const { return bound_; }

private:
    std::vector<UniPoly> chain_;
    Rational bound_;
};

struct RootBracket {
    Rational lo, hi;  // lo == hi encodes an exact rational root
    bool exact() const { return lo == hi; }
    Rational mid() const { return (lo + hi) / Rational(2); }
};

/// Distinct real roots of a squarefree polynomial over the scalar tower,
/// isolated into disjoint brackets of width <= 2^-bits, sorted ascending.
/// Open-bracket endpoints are never roots.
std::vector<RootBracket> isolate_real_roots(const UniPoly& p, int bits);

/// Shrinks an isolating bracket (single sign-change root inside) to width
/// <= 2^-bits by exact bisection.
RootBracket refine_bracket(const UniPoly& p, RootBracket b, int bits);

/// The rational with the smallest denominator in [lo, hi].
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

/// content * prod(factors[i]^mult[i]) reconstructs the input exactly.
struct FactorList {
    Rational content;
    std::vector<std::pair<UniPoly, int>> factors;  // primitive integer, positive leading coeff
};

/// Exact best-effort factorization of a rational-coefficient polynomial:
/// rational roots by bounded-denominator reconstruction, irreducible
/// quadratics recognized from conjugate real-root pairs, and degree >= 3
/// factors recovered by subset reconstruction from real roots. Every factor
/// is certified by exact division (recognition can never produce a wrong
/// factor); pieces that resist recognition are returned unfactored.
FactorList factor_rational_poly(const UniPoly& p);

/// Primitive integer minimal polynomial (degree 1 or 2) of a tower element,
/// in the variable "q".
UniPoly minimal_polynomial(const ExactNumber& x);

}  // namespace fwe
