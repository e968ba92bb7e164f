#include "fwe/moments.hpp"

#include <algorithm>

#include "fwe/errors.hpp"
#include "fwe/numeric.hpp"
#include "fwe/realroots.hpp"

namespace fwe {

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

Parity parity_from_string(const std::string& s) {
    if (s == "even") return Parity::even;
    if (s == "odd") return Parity::odd;
    throw std::domain_error("parity must be 'even' or 'odd'");
}

namespace {

Rational binom(long a, long b) {
    if (b < 0 || b > a || a < 0) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return Rational(r);
}

}  // namespace

MomentMatrix moment_matrix(long n, Parity parity) {
    if (n < 1) throw std::domain_error("moment matrix needs n >= 1");
    const bool even = parity == Parity::even;
    const long N = even ? 2 * n : 2 * n + 1;  // degree of the enumerator
    const std::string var = even ? "q" : "t";
    MomentMatrix m{n, parity, {}};
    m.entries.assign(n + 1, std::vector<UniPoly>(n + 1, UniPoly(var)));
    for (long nu = 0; nu <= n; ++nu) {
        // q^(n-nu) for even parity, t^(2(n-nu)+1) for odd.
        long e = even ? n - nu : 2 * (n - nu) + 1;
        for (long i = 0; i <= n; ++i) {
            UniPoly cell = UniPoly::constant(ExactNumber(binom(N - 2 * i, nu)), var);
            Rational c2 = binom(N - 2 * i, N - nu);
            if (!c2.is_zero()) cell += UniPoly::monomial(ExactNumber(c2), e, var);
            m.entries[nu][i] = std::move(cell);
        }
    }
    return m;
}

namespace {

// Dense integer polynomial arithmetic for the fraction-free elimination;
// plain mpz avoids rational canonicalization on every coefficient.
using ZPoly = std::vector<mpz_class>;  // ascending, trailing zeros trimmed

void ztrim(ZPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (sgn(b[j]) != 0) out[i + j] += a[i] * b[j];
    }
    return out;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), mpz_class(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    ztrim(a);
    return a;
}

// Exact quotient in Z[q]; every leading-coefficient division is integral
// because the quotient is known to be an integer polynomial.
ZPoly zdivexact(ZPoly num, const ZPoly& den) {
    if (den.empty()) throw std::domain_error("polynomial division by zero");
    if (num.empty()) return {};
    if (num.size() < den.size()) throw InternalError("inexact polynomial division");
    ZPoly q(num.size() - den.size() + 1, mpz_class(0));
    while (num.size() >= den.size()) {
        mpz_class factor, rem;
        mpz_fdiv_qr(factor.get_mpz_t(), rem.get_mpz_t(), num.back().get_mpz_t(),
                    den.back().get_mpz_t());
        if (sgn(rem) != 0) throw InternalError("inexact polynomial division");
        std::size_t shift = num.size() - den.size();
        q[shift] = factor;
        for (std::size_t i = 0; i < den.size(); ++i) num[i + shift] -= factor * den[i];
        ztrim(num);  // the leading term cancels exactly, so num shrinks every pass
    }
    if (!num.empty()) throw InternalError("inexact polynomial division");
    return q;
}

}  // namespace

UniPoly poly_det(const MomentMatrix& m) {
    const std::string& var = m.entries[0][0].var();
    const std::size_t size = m.entries.size();
    std::vector<std::vector<ZPoly>> a(size, std::vector<ZPoly>(size));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
            ZPoly cell;
            for (const auto& c : m.entries[i][j].coeffs()) {
                if (!c.is_rational() || !c.rat().is_integer())
                    throw std::domain_error("moment matrix entries must be integer polynomials");
                cell.push_back(c.rat().num());
            }
            ztrim(cell);
            a[i][j] = std::move(cell);
        }

    ZPoly prev{mpz_class(1)};
    int sign = 1;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        std::size_t pivot = k;
        while (pivot < size && a[pivot][k].empty()) ++pivot;
        if (pivot == size) return UniPoly(var);  // zero column: singular
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j)
                a[i][j] = zdivexact(zsub(zmul(a[i][j], a[k][k]), zmul(a[i][k], a[k][j])), prev);
            a[i][k].clear();
        }
        prev = a[k][k];
    }
    const ZPoly& det = a[size - 1][size - 1];
    std::vector<ExactNumber> out;
    out.reserve(det.size());
    for (const auto& c : det) out.emplace_back(Rational(sign < 0 ? mpz_class(-c) : c));
    return UniPoly(std::move(out), var);
}

namespace {

// Exact roots of a degree <= 2 primitive integer factor, within the tower.
std::vector<ExactNumber> roots_of_small_factor(const UniPoly& f) {
    if (f.degree() == 1) return {-(f[0] / f[1])};
    if (f.degree() == 2) {
        ExactNumber a = f[2], b = f[1], c = f[0];
        ExactNumber disc = b * b - ExactNumber(4) * a * c;
        if (disc.sign() < 0) return {};  // complex pair
        auto sq = sqrt_in_field(disc);
        if (!sq) return {};  // square-free kernel beyond the supported tag range
        ExactNumber half(Rational(1, 2));
        return {(-b + *sq) * half / a, (-b - *sq) * half / a};
    }
    return {};
}

}  // namespace

CandidateSearch candidate_q(const UniPoly& D, Parity parity) {
    if (D.is_zero()) throw std::domain_error("candidate search on the zero polynomial");
    CandidateSearch out;
    if (D.degree() < 1) return out;

    FactorList fl = factor_rational_poly(D);
    for (const auto& [factor, mult] : fl.factors) {
        if (factor.degree() > 2) {
            for (int i = 0; i < mult; ++i) out.unresolved.push_back(factor);
            continue;
        }
        std::vector<ExactNumber> roots = roots_of_small_factor(factor);
        if (roots.empty() && factor.degree() == 2) {
            // real-representability fell outside the tower; surface verbatim
            for (int i = 0; i < mult; ++i) out.unresolved.push_back(factor);
            continue;
        }
        for (const ExactNumber& r : roots) {
            CandidateQ cand;
            if (parity == Parity::even) {
                if (r.sign() <= 0 || r.is_one()) continue;
                cand.q = r;
                cand.t = sqrt_in_field(r);
            } else {
                if (r.sign() <= 0 || r.is_one()) continue;  // roots t <= 0 discarded; t=1 gives q=1
                cand.q = r * r;
                cand.t = r;
            }
            cand.minimal_polynomial = minimal_polynomial(cand.q);
            cand.multiplicity = mult;
            out.candidates.push_back(std::move(cand));
        }
    }

    // Deterministic presentation order: ascending numeric value.
    std::sort(out.candidates.begin(), out.candidates.end(),
              [](const CandidateQ& a, const CandidateQ& b) {
                  if (same_field(a.q, b.q)) return (a.q - b.q).sign() < 0;
                  return approx(a.q, 64).mid() < approx(b.q, 64).mid();
              });
    return out;
}

std::vector<HomogPoly> construct_enumerator(long n, Parity parity, const CandidateQ& q) {
    const bool even = parity == Parity::even;
    if (!even && !q.t) throw std::domain_error("odd-degree construction requires sqrt(q) in the tower");
    const ExactNumber point = even ? q.q : *q.t;

    MomentMatrix m = moment_matrix(n, parity);
    std::vector<std::vector<ExactNumber>> a(n + 1, std::vector<ExactNumber>(n + 1, ExactNumber(0)));
    for (long i = 0; i <= n; ++i)
        for (long j = 0; j <= n; ++j) a[i][j] = m.entries[i][j].eval(point);

    // Reduced row echelon form over the field.
    std::vector<long> pivot_col;
    long row = 0;
    for (long col = 0; col <= n && row <= n; ++col) {
        long pr = -1;
        for (long r = row; r <= n; ++r)
            if (!a[r][col].is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[pr], a[row]);
        ExactNumber inv = a[row][col].inv();
        for (long j = 0; j <= n; ++j) a[row][j] *= inv;
        for (long r = 0; r <= n; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            ExactNumber f = a[r][col];
            for (long j = 0; j <= n; ++j) a[r][j] -= f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }

    if (row > n) throw std::invalid_argument("moment matrix is regular at q: no enumerator exists");

    // One kernel basis vector per free column.
    std::vector<std::vector<ExactNumber>> basis;
    for (long col = 0; col <= n; ++col) {
        if (std::find(pivot_col.begin(), pivot_col.end(), col) != pivot_col.end()) continue;
        std::vector<ExactNumber> v(n + 1, ExactNumber(0));
        v[col] = ExactNumber(1);
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][col];
        basis.push_back(std::move(v));
    }
    if (basis.empty()) throw std::invalid_argument("moment matrix is regular at q: no enumerator exists");

    const long degree = even ? 2 * n : 2 * n + 1;
    std::vector<HomogPoly> result;
    for (auto& v : basis) {
        if (!v[0].is_zero() && !v[0].is_one()) {
            ExactNumber inv = v[0].inv();
            for (auto& c : v) c *= inv;
        }
        std::vector<ExactNumber> coeffs(degree + 1, ExactNumber(0));
        for (long i = 0; i <= n; ++i) coeffs[2 * i] = v[i];
        HomogPoly w(degree, std::move(coeffs));
        if (fwe_classify(w, q.q, q.t) != SymClass::anti_invariant)
            throw InternalError("constructed enumerator failed the anti-invariance verification");
        result.push_back(std::move(w));
    }
    return result;
}

bool moment_identity_check(const HomogPoly& W, const ExactNumber& q,
                           const std::optional<ExactNumber>& sqrt_q) {
    const long n = W.degree();
    ExactNumber root;
    if (n % 2 != 0) {
        if (!sqrt_q) throw FieldMismatchError("odd-degree moment identities require sqrt(q)");
        if (*sqrt_q * *sqrt_q != q) throw std::domain_error("sqrt_q^2 != q");
        root = *sqrt_q;
    }
    for (long nu = 0; nu <= n; ++nu) {
        ExactNumber lhs(0), rhs(0);
        for (long i = 0; i <= n - nu; ++i) lhs += ExactNumber(binom(n - i, nu)) * W.coeff(i);
        for (long i = 0; i <= nu; ++i) rhs += ExactNumber(binom(n - i, n - nu)) * W.coeff(i);
        // q^(n/2 - nu), as a power of sqrt(q) when n is odd.
        ExactNumber scale = n % 2 == 0 ? q.pow(n / 2 - nu) : root.pow(n - 2 * nu);
        if (lhs != -(scale * rhs)) return false;
    }
    return true;
}

}  // namespace fwe
