#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fwe/homogpoly.hpp"
#include "fwe/unipoly.hpp"

namespace fwe {

enum class Parity { even, odd };

std::string to_string(Parity p);
Parity parity_from_string(const std::string& s);

/// Coefficient matrix of the binomial-moment system for degree-2n (even) or
/// degree-(2n+1) (odd) enumerators supported on even powers of y. Entries
/// are polynomials in q (even) or t = sqrt(q) (odd):
///   even: entry(nu,i) = C(2n-2i, nu)   + q^(n-nu)      * C(2n-2i, 2n-nu)
///   odd:  entry(nu,i) = C(2n+1-2i, nu) + t^(2(n-nu)+1) * C(2n+1-2i, 2n+1-nu)
/// with out-of-range binomials equal to zero; rows nu = 0..n.
struct MomentMatrix {
    long n;
    Parity parity;
    std::vector<std::vector<UniPoly>> entries;  // (n+1) x (n+1)
};

MomentMatrix moment_matrix(long n, Parity parity);

/// Exact determinant by fraction-free (Bareiss) elimination.
UniPoly poly_det(const MomentMatrix& m);

/// An admissible q recognized from a determinant root: q > 0, q != 1, of
/// algebraic degree <= 2, with sqrt(q) attached when it lies in the tower.
struct CandidateQ {
    ExactNumber q;
    std::optional<ExactNumber> t;  // sqrt(q) when representable
    UniPoly minimal_polynomial;    // primitive integer, in q
    int multiplicity = 1;
};

struct CandidateSearch {
    std::vector<CandidateQ> candidates;
    std::vector<UniPoly> unresolved;  // certified factors of degree >= 3, verbatim
};

/// All real roots of D of algebraic degree <= 2 (for odd parity: roots t > 0
/// of the t-polynomial, mapped to q = t^2), filtered to q > 0, q != 1, with
/// multiplicities. Factors of degree >= 3 are returned unfactored in
/// `unresolved`. Root recognition is verified by exact division and can not
/// produce false positives.
CandidateSearch candidate_q(const UniPoly& D, Parity parity);

/// Exact nullspace of the moment matrix specialized at the candidate,
/// assembled into enumerators of degree 2n (even) or 2n+1 (odd) with only
/// even powers of y. Basis vectors with nonzero constant coefficient are
/// normalized to A_0 = 1; each returned polynomial is verified
/// anti-invariant under the q-transform.
std::vector<HomogPoly> construct_enumerator(long n, Parity parity, const CandidateQ& q);

/// True iff the binomial-moment identities
///   sum_{i<=n-nu} C(n-i, nu) A_i = -q^(n/2-nu) sum_{i<=nu} C(n-i, n-nu) A_i
/// hold exactly for nu = 0..n, with A_i the full coefficient list of W.
/// Odd-degree W requires sqrt_q.
bool moment_identity_check(const HomogPoly& W, const ExactNumber& q,
                           const std::optional<ExactNumber>& sqrt_q = std::nullopt);

}  // namespace fwe
