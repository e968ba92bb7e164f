#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fwe/rational.hpp"
#include "fwe/zeta.hpp"

namespace fwe {

enum class RhStatus { holds, fails, indeterminate };
enum class RhMethod { exact_sturm, numeric_certified, ivt_witness };

std::string to_string(RhStatus s);
std::string to_string(RhMethod m);

/// A certificate fragment. Interval witnesses carry exact rational
/// endpoints; for failing verdicts at least one witness isolates a root
/// certifiedly off the circle |T| = 1/sqrt(q).
struct RhWitness {
    std::string description;
    std::optional<Rational> lo, hi;
};

struct RHVerdict {
    RhStatus status = RhStatus::indeterminate;
    RhMethod method = RhMethod::numeric_certified;
    std::vector<RhWitness> witnesses;
    int precision_used = 0;
};

Rational default_rh_tolerance();  // 10^-30

/// Decides whether all zeros of Z.P lie on |T| = 1/sqrt(q).
///
/// Exact path (when sqrt(q) lies in the tower compatibly with P's
/// coefficients and the functional-equation structure is present):
/// normalize to Q(u) = P(u/sqrt(q)), deflate the forced roots u = +-1,
/// substitute V = u + 1/u and decide real-rootedness of S(V) in [-2, 2] by
/// Sturm sequences; the verdict is unconditional. Numeric path (fallback):
/// simultaneous root isolation with a posteriori certified disks; failures
/// additionally search for an exact sign-change witness of P at rational
/// points. Degenerate precision ends in `indeterminate`, never a guess.
RHVerdict rh_check(const ZetaResult& Z, const ExactNumber& q, int precision_bits = 256,
                   const Rational& tolerance = default_rh_tolerance());

/// The exact path alone; nullopt when it is unavailable for this (P, q).
std::optional<RHVerdict> rh_check_exact(const ZetaResult& Z, const ExactNumber& q);

/// The certified numeric path alone.
RHVerdict rh_check_numeric(const ZetaResult& Z, const ExactNumber& q, int precision_bits = 256,
                           const Rational& tolerance = default_rh_tolerance());

}  // namespace fwe
