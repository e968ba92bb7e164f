#include "fwe/zeta.hpp"

#include <gmpxx.h>

#include "fwe/errors.hpp"

namespace fwe {

namespace {

long min_support(const HomogPoly& w) {
    for (long i = 1; i <= w.degree(); ++i)
        if (!w.coeff(i).is_zero()) return i;
    throw std::domain_error("polynomial has no coefficient with index >= 1");
}

Rational binom(long a, long b) {
    if (b < 0 || b > a || a < 0) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return Rational(r);
}

}  // namespace

long genus_two_g(const HomogPoly& W) {
    long n = W.degree(), d = min_support(W);
    if (2 * d > n + 2)
        throw std::domain_error("d > n/2 + 1: the genus would be negative and P not a polynomial");
    return n + 2 - 2 * d;
}

ZetaResult zeta_poly(const HomogPoly& W, const ExactNumber& q) {
    if (q.sign() <= 0 || q.is_one()) throw std::domain_error("zeta requires q > 0, q != 1");
    const long n = W.degree();

    std::optional<ExactNumber> sqrt_q;
    if (n % 2 != 0) {
        sqrt_q = sqrt_in_field(q);
        if (!sqrt_q)
            throw FieldMismatchError("odd-degree zeta data needs sqrt(q) inside the scalar tower");
    }
    WeightProfile profile = weight_profile(W, q, sqrt_q);
    if (profile.d < 2 || profile.d_perp < 2)
        throw std::domain_error("zeta polynomial requires d >= 2 and d_perp >= 2");
    const long d = profile.d;

    // Unknowns p_0..p_(n-d). The coefficient of T^(n-d) x^k y^(n-k) in
    // P(T)/((1-T)(1-qT)) (y(1-T)+xT)^n is
    //   C(n,k) * sum_i p_i * h(k,i),
    //   h(k,i) = sum_{m+j = n-d-k-i} c_m (-1)^j C(n-k, j),   c_m = 1+q+...+q^m,
    // and it must match the x^k y^(n-k) coefficient of (W - x^n)/(q-1).
    const long unknowns = n - d + 1;
    std::vector<ExactNumber> c_geom(static_cast<std::size_t>(n) + 1, ExactNumber(0));
    c_geom[0] = ExactNumber(1);
    for (std::size_t m = 1; m < c_geom.size(); ++m) c_geom[m] = c_geom[m - 1] * q + ExactNumber(1);

    ExactNumber qm1_inv = (q - ExactNumber(1)).inv();
    std::vector<std::vector<ExactNumber>> rows;
    for (long k = 0; k <= n; ++k) {
        std::vector<ExactNumber> row(static_cast<std::size_t>(unknowns) + 1, ExactNumber(0));
        ExactNumber ck(binom(n, k));
        for (long i = 0; i < unknowns; ++i) {
            long rem = n - d - k - i;
            if (rem < 0) continue;
            ExactNumber h(0);
            for (long j = 0; j <= std::min(rem, n - k); ++j) {
                long m = rem - j;
                ExactNumber term = c_geom[static_cast<std::size_t>(m)] * ExactNumber(binom(n - k, j));
                h += (j % 2 == 0) ? term : -term;
            }
            row[static_cast<std::size_t>(i)] = ck * h;
        }
        ExactNumber target = (k == n) ? (W.coeff(0) - ExactNumber(1)) * qm1_inv
                                      : W.coeff(n - k) * qm1_inv;
        row.back() = target;
        rows.push_back(std::move(row));
    }

    // Exact elimination with a consistency check: the system is
    // overdetermined and must pin down every unknown uniquely.
    long rank = 0;
    for (long col = 0; col < unknowns; ++col) {
        long pivot = -1;
        for (long r = rank; r < static_cast<long>(rows.size()); ++r)
            if (!rows[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw InternalError("zeta system is rank-deficient: P is not unique");
        std::swap(rows[pivot], rows[rank]);
        ExactNumber inv = rows[rank][col].inv();
        for (auto& v : rows[rank]) v *= inv;
        for (long r = 0; r < static_cast<long>(rows.size()); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            ExactNumber f = rows[r][col];
            for (std::size_t j = 0; j < rows[r].size(); ++j) rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    for (long r = rank; r < static_cast<long>(rows.size()); ++r)
        if (!rows[r].back().is_zero())
            throw InternalError("zeta system is inconsistent: no polynomial P matches W");

    std::vector<ExactNumber> p(static_cast<std::size_t>(unknowns), ExactNumber(0));
    for (long r = 0; r < rank; ++r) {
        long col = 0;
        while (rows[r][col].is_zero()) ++col;
        p[static_cast<std::size_t>(col)] = rows[r].back();
    }

    ZetaResult z;
    z.P = UniPoly(std::move(p), "T");
    z.two_g = n + 2 - 2 * d;
    z.klass = fwe_classify(W, q, sqrt_q);
    return z;
}

bool functional_eq_check(const ZetaResult& Z, const ExactNumber& q,
                         const std::optional<ExactNumber>& sqrt_q) {
    int sign = Z.sign();
    if (sign == 0) return false;  // no functional equation is claimed for unclassified sources
    const long two_g = Z.two_g;
    if (Z.P.degree() > two_g) return false;

    ExactNumber root;
    if (two_g % 2 != 0) {
        if (!sqrt_q) throw FieldMismatchError("odd 2g requires sqrt(q) for the functional equation");
        if (*sqrt_q * *sqrt_q != q) throw std::domain_error("sqrt_q^2 != q");
        root = *sqrt_q;
    }
    for (long j = 0; j <= two_g; ++j) {
        // q^(g-j) as an integer power of q or of sqrt(q).
        ExactNumber scale = two_g % 2 == 0 ? q.pow(two_g / 2 - j) : root.pow(two_g - 2 * j);
        ExactNumber rhs = scale * Z.P[static_cast<std::size_t>(j)];
        if (sign < 0) rhs = -rhs;
        if (Z.P[static_cast<std::size_t>(two_g - j)] != rhs) return false;
    }
    return true;
}

}  // namespace fwe
