#pragma once

#include <vector>

#include "fwe/unipoly.hpp"

namespace fwe {

/// Chebyshev polynomial of the first kind over the integers:
/// T_0 = 1, T_1 = x, T_(n+1) = 2x T_n - T_(n-1).
UniPoly chebyshev_T(long n);

/// q^(n/2) T_n(q^(-1/2)) as an exact polynomial in q (the parity of T_n
/// makes every exponent integral); degree [n/2], integer coefficients.
UniPoly chebyshev_in_q(long n);

/// Per-n outcome of the determinant-ratio identity
///   |A(n,q)| = 2 (-1)^n q^(n/2) T_n(q^(-1/2)) |A(n-1,q)|.
struct ChebyshevReport {
    long n_max;
    struct Row {
        long n;
        bool holds;
        UniPoly lhs;  // |A(n,q)|
        UniPoly rhs;  // 2 (-1)^n q^(n/2) T_n(q^(-1/2)) |A(n-1,q)|
    };
    std::vector<Row> results;

    bool all_hold() const {
        for (const auto& r : results)
            if (!r.holds) return false;
        return true;
    }
};

/// Verifies the identity exactly for n = 2..n_max. A failed comparison is
/// reported with both polynomials, never repaired.
ChebyshevReport verify_conjecture(long n_max);

}  // namespace fwe
