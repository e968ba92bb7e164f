#include "fwe/conjecture.hpp"

#include "fwe/errors.hpp"
#include "fwe/moments.hpp"

namespace fwe {

UniPoly chebyshev_T(long n) {
    if (n < 0) throw std::domain_error("chebyshev_T needs n >= 0");
    UniPoly prev = UniPoly::constant(ExactNumber(1), "x");
    if (n == 0) return prev;
    UniPoly cur = UniPoly::variable("x");
    UniPoly two_x = UniPoly::monomial(ExactNumber(2), 1, "x");
    for (long k = 1; k < n; ++k) {
        UniPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

UniPoly chebyshev_in_q(long n) {
    UniPoly t = chebyshev_T(n);
    // T_n has the parity of n, so x^k contributes q^((n-k)/2) with an
    // integral exponent; assert both parity and integrality.
    std::vector<ExactNumber> out(static_cast<std::size_t>(n) / 2 + 1, ExactNumber(0));
    for (long k = 0; k <= t.degree(); ++k) {
        const ExactNumber& c = t[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        if ((n - k) % 2 != 0) throw InternalError("Chebyshev parity violated");
        if (!c.is_rational() || !c.rat().is_integer())
            throw InternalError("Chebyshev coefficient not integral");
        out.at(static_cast<std::size_t>((n - k) / 2)) = c;
    }
    UniPoly result(std::move(out), "q");
    if (result.degree() != n / 2) throw InternalError("q-form of T_n has unexpected degree");
    return result;
}

ChebyshevReport verify_conjecture(long n_max) {
    if (n_max < 2) throw std::domain_error("verify_conjecture needs n_max >= 2");
    ChebyshevReport report{n_max, {}};
    UniPoly prev_det = poly_det(moment_matrix(1, Parity::even));
    for (long n = 2; n <= n_max; ++n) {
        UniPoly det = poly_det(moment_matrix(n, Parity::even));
        UniPoly rhs = chebyshev_in_q(n) * prev_det;
        rhs = rhs.scaled(ExactNumber(n % 2 == 0 ? 2 : -2));
        report.results.push_back({n, det == rhs, det, rhs});
        prev_det = std::move(det);
    }
    return report;
}

}  // namespace fwe
