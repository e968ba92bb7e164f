#pragma once

#include <optional>

#include "fwe/homogpoly.hpp"
#include "fwe/unipoly.hpp"

namespace fwe {

/// Zeta data of a weight enumerator: the polynomial P(T) with
/// Z(T) = P(T)/((1-T)(1-qT)), the doubled genus 2g = n + 2 - 2d (g may be
/// half-integral for odd n), and the symmetry class of the source.
struct ZetaResult {
    UniPoly P;
    long two_g = 0;
    SymClass klass = SymClass::neither;

    /// +1 invariant, -1 anti-invariant, 0 neither.
    int sign() const {
        if (klass == SymClass::invariant) return 1;
        if (klass == SymClass::anti_invariant) return -1;
        return 0;
    }
};

/// 2g = n + 2 - 2d; throws when d > n/2 + 1 (g must be nonnegative).
long genus_two_g(const HomogPoly& W);

/// The unique P of degree <= n-d such that the coefficient of T^(n-d) in
///   P(T)/((1-T)(1-qT)) * (y(1-T)+xT)^n
/// equals (W - x^n)/(q-1), solved as an exact linear system. Requires
/// d >= 2 and d_perp >= 2; odd n requires sqrt(q) in the tower (used for
/// the classification of W).
ZetaResult zeta_poly(const HomogPoly& W, const ExactNumber& q);

/// Exact coefficient identity p_(2g-j) = sign * q^(g-j) * p_j for all j;
/// q^(g-j) is rendered via sqrt_q when 2g is odd.
bool functional_eq_check(const ZetaResult& Z, const ExactNumber& q,
                         const std::optional<ExactNumber>& sqrt_q = std::nullopt);

}  // namespace fwe
