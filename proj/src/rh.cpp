#include "fwe/rh.hpp"

#include <algorithm>
#include <cmath>

#include "fwe/errors.hpp"
#include "fwe/numeric.hpp"
#include "fwe/realroots.hpp"

namespace fwe {

std::string to_string(RhStatus s) {
    switch (s) {
        case RhStatus::holds: return "holds";
        case RhStatus::fails: return "fails";
        default: return "indeterminate";
    }
}

std::string to_string(RhMethod m) {
    switch (m) {
        case RhMethod::exact_sturm: return "exact-sturm";
        case RhMethod::numeric_certified: return "numeric-certified";
        default: return "ivt-witness";
    }
}

Rational default_rh_tolerance() { return Rational(1, 10).pow(30); }

// ===========================================================================
// Exact path
// ===========================================================================

namespace {

UniPoly squarefree_part(const UniPoly& p) {
    if (p.degree() <= 1) return p;
    UniPoly g = poly_gcd(p, p.derivative());
    return g.degree() == 0 ? p : p.divexact(g);
}

// Exact sign change of P across a rational bracket certifies a real root;
// it is off the circle iff root^2 != 1/q, checked exactly via the bracket.
std::optional<RhWitness> exact_ivt_witness(const UniPoly& P, const ExactNumber& q,
                                           const Rational& lo, const Rational& hi,
                                           const std::string& label) {
    if (!(lo < hi)) return std::nullopt;
    int s1 = P.eval(ExactNumber(lo)).sign();
    int s2 = P.eval(ExactNumber(hi)).sign();
    if (s1 == 0 || s2 == 0 || s1 == s2) return std::nullopt;
    // Both endpoints on one side of zero, so root^2 is bracketed exactly.
    if (lo.sign() < 0 && hi.sign() > 0) return std::nullopt;
    Rational a2 = lo * lo, b2 = hi * hi;
    if (a2 > b2) std::swap(a2, b2);
    ExactNumber inv_q = q.inv();
    bool off_circle = (ExactNumber(b2) - inv_q).sign() < 0 || (ExactNumber(a2) - inv_q).sign() > 0;
    if (!off_circle) return std::nullopt;
    RhWitness w;
    w.description = label + ": sign change of P over [" + lo.str() + ", " + hi.str() +
                    "] isolates a real root with root^2 != 1/q";
    w.lo = lo;
    w.hi = hi;
    return w;
}

struct ExactReduction {
    UniPoly S;        // the V = u + 1/u reduction, coefficients in the tower
    UniPoly Q;        // normalized P(u/sqrt(q)) * sqrt(q)^deg
    ExactNumber s;    // sqrt(q)
    long forced = 0;  // deflated roots at u = +-1 (they lie on the circle)
};

// Builds the palindromic reduction when the structure is present.
std::optional<ExactReduction> exact_reduction(const ZetaResult& Z, const ExactNumber& q) {
    int sign = Z.sign();
    if (sign == 0) return std::nullopt;
    if (Z.P.degree() != Z.two_g) return std::nullopt;

    auto s = sqrt_in_field(q);
    if (!s) return std::nullopt;
    // All of P's coefficients must live in a field compatible with sqrt(q).
    long long ds = s->field_d(), dp;
    try {
        dp = Z.P.field_d();
    } catch (const FieldMismatchError&) {
        return std::nullopt;
    }
    if (ds != 0 && dp != 0 && ds != dp) return std::nullopt;

    const long two_g = Z.two_g;
    // Q(u) = P(u/s) s^(2g): coefficient of u^j is p_j s^(2g-j).
    std::vector<ExactNumber> qc(static_cast<std::size_t>(two_g) + 1, ExactNumber(0));
    for (long j = 0; j <= two_g; ++j)
        qc[static_cast<std::size_t>(j)] = Z.P[static_cast<std::size_t>(j)] * s->pow(two_g - j);
    UniPoly Q(qc, "u");
    if (Q.degree() != two_g) return std::nullopt;

    // The functional equation makes Q palindromic (invariant) or
    // anti-palindromic (anti-invariant); verify rather than assume.
    for (long j = 0; j <= two_g; ++j) {
        ExactNumber expect = Q[static_cast<std::size_t>(two_g - j)];
        if (sign < 0) expect = -expect;
        if (Q[static_cast<std::size_t>(j)] != expect) return std::nullopt;
    }

    ExactReduction red;
    red.s = *s;
    red.Q = Q;
    UniPoly R = Q;
    UniPoly u_minus_1({ExactNumber(-1), ExactNumber(1)}, "u");
    UniPoly u_plus_1({ExactNumber(1), ExactNumber(1)}, "u");
    if (sign < 0) {
        // Anti-palindromic: u = 1 is always a root; u = -1 as well when the
        // degree is even. Both lie on |u| = 1.
        if (!R.eval(ExactNumber(1)).is_zero()) throw InternalError("anti-palindromic Q with Q(1) != 0");
        R = R.divexact(u_minus_1);
        ++red.forced;
        if (two_g % 2 == 0) {
            if (!R.eval(ExactNumber(-1)).is_zero())
                throw InternalError("anti-palindromic Q of even degree with Q(-1) != 0");
            R = R.divexact(u_plus_1);
            ++red.forced;
        }
    }
    if (R.degree() % 2 != 0) return std::nullopt;  // no palindromic reduction
    const long h = R.degree() / 2;
    for (long j = 0; j <= 2 * h; ++j)
        if (R[static_cast<std::size_t>(j)] != R[static_cast<std::size_t>(2 * h - j)])
            return std::nullopt;

    // R(u)/u^h = R_h + sum_j R_(h+j) (u^j + u^-j) and u^j + u^-j = G_j(V)
    // with G_0 = 2, G_1 = V, G_(j+1) = V G_j - G_(j-1).
    UniPoly V = UniPoly::variable("V");
    UniPoly g_prev = UniPoly::constant(ExactNumber(2), "V"), g_cur = V;
    UniPoly S = UniPoly::constant(R[static_cast<std::size_t>(h)], "V");
    for (long j = 1; j <= h; ++j) {
        S += g_cur.scaled(R[static_cast<std::size_t>(h + j)]);
        UniPoly g_next = V * g_cur - g_prev;
        g_prev = std::move(g_cur);
        g_cur = std::move(g_next);
    }
    red.S = std::move(S);
    return red;
}

std::optional<RHVerdict> run_exact(const ZetaResult& Z, const ExactNumber& q) {
    auto red = exact_reduction(Z, q);
    if (!red) return std::nullopt;

    RHVerdict v;
    v.method = RhMethod::exact_sturm;
    if (red->S.degree() <= 0) {
        v.status = RhStatus::holds;  // only forced roots at u = +-1
        return v;
    }

    // All roots of S real and in [-2, 2]  <=>  all roots of P on the circle.
    UniPoly S0 = squarefree_part(red->S);
    UniPoly v_minus_2({ExactNumber(-2), ExactNumber(1)}, "V");
    UniPoly v_plus_2({ExactNumber(2), ExactNumber(1)}, "V");
    if (S0.eval(ExactNumber(2)).is_zero()) S0 = S0.divexact(v_minus_2);
    if (S0.eval(ExactNumber(-2)).is_zero()) S0 = S0.divexact(v_plus_2);
    if (S0.degree() <= 0) {
        v.status = RhStatus::holds;
        return v;
    }

    SturmChain chain(S0);
    long inside = chain.count(ExactNumber(-2), ExactNumber(2));
    if (inside == S0.degree()) {
        v.status = RhStatus::holds;
        return v;
    }

    v.status = RhStatus::fails;
    long total_real = chain.count_all();
    long outside = total_real - inside;
    if (outside > 0) {
        // Real V-roots beyond [-2,2] give real u with |u| != 1; isolate them
        // and turn each into an exact sign-change witness for Q(u).
        auto brackets = isolate_real_roots(S0, 96);
        for (const auto& b : brackets) {
            if (!(b.hi < Rational(-2) || b.lo > Rational(2))) continue;
            RhWitness w;
            w.description = "V = u + 1/u has a real root outside [-2, 2] in [" + b.lo.str() + ", " +
                            b.hi.str() + "]";
            w.lo = b.lo;
            w.hi = b.hi;
            v.witnesses.push_back(std::move(w));
            // u solves u^2 - V u + 1 = 0; bracket u = (V + sqrt(V^2-4))/2
            // crudely and certify by exact signs of Q.
            double vd = (b.lo + b.hi).mpq().get_d() / 2;
            double ud = (std::abs(vd) + std::sqrt(vd * vd - 4 > 0 ? vd * vd - 4 : 0)) / 2;
            if (vd < 0) ud = -ud;
            for (int widen = 0; widen < 8; ++widen) {
                double r = 0.02 * (1 << widen);
                Rational lo(static_cast<long>(std::floor((ud - r) * 4096)), 4096);
                Rational hi(static_cast<long>(std::ceil((ud + r) * 4096)), 4096);
                auto w2 = exact_ivt_witness(red->Q, q, lo, hi, "normalized coordinate u");
                if (w2) {
                    // In u-coordinates the circle is |u| = 1, so certify
                    // u^2 != 1 instead of u^2 != 1/q: redo the comparison.
                    int s1 = red->Q.eval(ExactNumber(lo)).sign();
                    int s2 = red->Q.eval(ExactNumber(hi)).sign();
                    Rational a2 = lo * lo, b2 = hi * hi;
                    if (a2 > b2) std::swap(a2, b2);
                    if (s1 * s2 < 0 && (b2 < Rational(1) || a2 > Rational(1))) {
                        RhWitness uw;
                        uw.description = "sign change of Q(u) = P(u/sqrt(q)) over [" + lo.str() +
                                         ", " + hi.str() + "] isolates a real root with |u| != 1";
                        uw.lo = lo;
                        uw.hi = hi;
                        v.witnesses.push_back(std::move(uw));
                        break;
                    }
                }
            }
        }
    }
    if (total_real < S0.degree()) {
        RhWitness w;
        w.description = "the symmetric reduction S(V) has " + std::to_string(S0.degree()) +
                        " zeros but only " + std::to_string(total_real) +
                        " real ones: a quadruple of zeros of P lies off the circle";
        v.witnesses.push_back(std::move(w));
    }
    return v;
}

// ===========================================================================
// Numeric path: Weierstrass simultaneous iteration + certified disks
// ===========================================================================

// Real interval with directed endpoints, and complex rectangles over it.
struct RInt {
    BigFloat lo, hi;

    explicit RInt(mpfr_prec_t prec = 128) : lo(prec), hi(prec) {}
    static RInt point(const BigFloat& x) {
        RInt r(x.prec());
        r.lo = x;
        r.hi = x;
        return r;
    }
    static RInt of(const ExactNumber& x, mpfr_prec_t prec) {
        RealInterval iv = approx(x, static_cast<int>(prec));
        RInt r(prec);
        mpfr_set(r.lo.get(), iv.lo.get(), MPFR_RNDD);
        mpfr_set(r.hi.get(), iv.hi.get(), MPFR_RNDU);
        return r;
    }
};

RInt iadd(const RInt& a, const RInt& b) {
    RInt r(a.lo.prec());
    mpfr_add(r.lo.get(), a.lo.get(), b.lo.get(), MPFR_RNDD);
    mpfr_add(r.hi.get(), a.hi.get(), b.hi.get(), MPFR_RNDU);
    return r;
}

RInt isub(const RInt& a, const RInt& b) {
    RInt r(a.lo.prec());
    mpfr_sub(r.lo.get(), a.lo.get(), b.hi.get(), MPFR_RNDD);
    mpfr_sub(r.hi.get(), a.hi.get(), b.lo.get(), MPFR_RNDU);
    return r;
}

RInt imul(const RInt& a, const RInt& b) {
    mpfr_prec_t prec = a.lo.prec();
    RInt r(prec);
    BigFloat c(prec);
    bool first = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_srcptr x = i ? a.hi.get() : a.lo.get();
            mpfr_srcptr y = j ? b.hi.get() : b.lo.get();
            mpfr_mul(c.get(), x, y, MPFR_RNDD);
            if (first || mpfr_cmp(c.get(), r.lo.get()) < 0) mpfr_set(r.lo.get(), c.get(), MPFR_RNDD);
            mpfr_mul(c.get(), x, y, MPFR_RNDU);
            if (first || mpfr_cmp(c.get(), r.hi.get()) > 0) mpfr_set(r.hi.get(), c.get(), MPFR_RNDU);
            first = false;
        }
    return r;
}

// Upper bound of |x| over the interval.
BigFloat imag_up(const RInt& a) {
    BigFloat m(a.lo.prec());
    mpfr_abs(m.get(), a.lo.get(), MPFR_RNDU);
    BigFloat m2(a.lo.prec());
    mpfr_abs(m2.get(), a.hi.get(), MPFR_RNDU);
    if (mpfr_cmp(m2.get(), m.get()) > 0) return m2;
    return m;
}

// Lower bound of |x| over the interval (0 when it straddles zero).
BigFloat imag_down(const RInt& a) {
    BigFloat m(a.lo.prec());
    if (a.lo.sign() <= 0 && a.hi.sign() >= 0) {
        mpfr_set_zero(m.get(), 1);
        return m;
    }
    mpfr_abs(m.get(), a.lo.get(), MPFR_RNDD);
    BigFloat m2(a.lo.prec());
    mpfr_abs(m2.get(), a.hi.get(), MPFR_RNDD);
    if (mpfr_cmp(m2.get(), m.get()) < 0) return m2;
    return m;
}

struct CInt {
    RInt re, im;
    explicit CInt(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
};

CInt cadd(const CInt& a, const CInt& b) {
    CInt r(a.re.lo.prec());
    r.re = iadd(a.re, b.re);
    r.im = iadd(a.im, b.im);
    return r;
}

CInt cmul(const CInt& a, const CInt& b) {
    CInt r(a.re.lo.prec());
    r.re = isub(imul(a.re, b.re), imul(a.im, b.im));
    r.im = iadd(imul(a.re, b.im), imul(a.im, b.re));
    return r;
}

BigFloat cmag_up(const CInt& z) {
    mpfr_prec_t prec = z.re.lo.prec();
    BigFloat a = imag_up(z.re), b = imag_up(z.im), r(prec);
    mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDU);
    return r;
}

BigFloat cmag_down(const CInt& z) {
    mpfr_prec_t prec = z.re.lo.prec();
    BigFloat a = imag_down(z.re), b = imag_down(z.im), r(prec);
    mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDD);
    return r;
}

// Plain complex point arithmetic (round to nearest) for the iteration.
struct CPt {
    BigFloat re, im;
    explicit CPt(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
};

CPt cpt_sub(const CPt& a, const CPt& b) {
    CPt r(a.re.prec());
    mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    return r;
}

CPt cpt_mul(const CPt& a, const CPt& b) {
    mpfr_prec_t prec = a.re.prec();
    CPt r(prec);
    BigFloat t1(prec), t2(prec);
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(r.re.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), t1.get(), t2.get(), MPFR_RNDN);
    return r;
}

CPt cpt_div(const CPt& a, const CPt& b) {
    mpfr_prec_t prec = a.re.prec();
    BigFloat den(prec), t1(prec), t2(prec);
    mpfr_mul(t1.get(), b.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), b.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(den.get(), t1.get(), t2.get(), MPFR_RNDN);
    CPt r(prec);
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_div(r.re.get(), t1.get(), den.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_div(r.im.get(), t1.get(), den.get(), MPFR_RNDN);
    return r;
}

struct CertifiedRoot {
    CPt center;
    BigFloat radius;
    RhStatus circle_status;  // holds: certifiedly within tolerance; fails: certifiedly off
    CertifiedRoot(CPt c, BigFloat r) : center(std::move(c)), radius(std::move(r)) {}
};

// One isolation attempt at a fixed working precision. Returns certified
// disks (pairwise disjoint, one root each) or nothing.
std::optional<std::vector<CertifiedRoot>> isolate_disks(const UniPoly& P, mpfr_prec_t prec) {
    const long deg = P.degree();
    // Monic normalization over the field keeps the Lagrange certification
    // applicable to the true polynomial.
    UniPoly monic = P.scaled(P.leading().inv());

    std::vector<CPt> z;
    double radius0 = 1.0;
    for (const auto& c : monic.coeffs()) {
        double m = std::abs(approx(c, 64).mid());
        radius0 = std::max(radius0, 1.0 + m);
    }
    for (long k = 0; k < deg; ++k) {
        CPt p(prec);
        double ang = 2 * 3.14159265358979323846 * (static_cast<double>(k) / deg) + 0.41;
        mpfr_set_d(p.re.get(), radius0 * std::cos(ang), MPFR_RNDN);
        mpfr_set_d(p.im.get(), radius0 * std::sin(ang), MPFR_RNDN);
        z.push_back(std::move(p));
    }

    std::vector<CPt> coeff_pts;
    for (const auto& c : monic.coeffs()) {
        CPt p(prec);
        RealInterval iv = approx(c, static_cast<int>(prec));
        mpfr_add(p.re.get(), iv.lo.get(), iv.hi.get(), MPFR_RNDN);
        mpfr_div_ui(p.re.get(), p.re.get(), 2, MPFR_RNDN);
        coeff_pts.push_back(std::move(p));
    }

    auto eval_pt = [&](const CPt& x) {
        CPt acc(prec);
        for (std::size_t i = coeff_pts.size(); i-- > 0;) {
            acc = cpt_mul(acc, x);
            mpfr_add(acc.re.get(), acc.re.get(), coeff_pts[i].re.get(), MPFR_RNDN);
            mpfr_add(acc.im.get(), acc.im.get(), coeff_pts[i].im.get(), MPFR_RNDN);
        }
        return acc;
    };

    const long max_iter = 60 + 4 * deg;
    BigFloat eps(prec), tmp(prec);
    mpfr_set_ui_2exp(eps.get(), 1, -static_cast<mpfr_exp_t>(prec - 8), MPFR_RNDN);
    for (long it = 0; it < max_iter; ++it) {
        BigFloat worst(prec);
        for (long i = 0; i < deg; ++i) {
            CPt num = eval_pt(z[i]);
            CPt den(prec);
            mpfr_set_ui(den.re.get(), 1, MPFR_RNDN);
            for (long j = 0; j < deg; ++j)
                if (j != i) den = cpt_mul(den, cpt_sub(z[i], z[j]));
            CPt w = cpt_div(num, den);
            mpfr_sub(z[i].re.get(), z[i].re.get(), w.re.get(), MPFR_RNDN);
            mpfr_sub(z[i].im.get(), z[i].im.get(), w.im.get(), MPFR_RNDN);
            mpfr_hypot(tmp.get(), w.re.get(), w.im.get(), MPFR_RNDU);
            if (mpfr_cmp(tmp.get(), worst.get()) > 0) worst = tmp;
        }
        if (mpfr_cmp(worst.get(), eps.get()) < 0) break;
    }

    // Certification. |w_i| <= up|p(z_i)| / down|prod (z_i - z_j)|; all roots
    // lie in the union of D(z_i, deg * |w_i|), and pairwise disjoint disks
    // hold exactly one root each.
    std::vector<CInt> coeff_ivs;
    for (const auto& c : monic.coeffs()) {
        CInt ci(prec);
        ci.re = RInt::of(c, prec);
        coeff_ivs.push_back(std::move(ci));
    }
    auto eval_iv = [&](const CPt& x) {
        CInt acc(prec);
        CInt xi(prec);
        xi.re = RInt::point(x.re);
        xi.im = RInt::point(x.im);
        for (std::size_t i = coeff_ivs.size(); i-- > 0;) acc = cadd(cmul(acc, xi), coeff_ivs[i]);
        return acc;
    };

    std::vector<CertifiedRoot> roots;
    for (long i = 0; i < deg; ++i) {
        BigFloat num_up = cmag_up(eval_iv(z[i]));
        BigFloat den_down(prec);
        mpfr_set_ui(den_down.get(), 1, MPFR_RNDD);
        for (long j = 0; j < deg; ++j) {
            if (j == i) continue;
            CInt diff(prec);
            diff.re = isub(RInt::point(z[i].re), RInt::point(z[j].re));
            diff.im = isub(RInt::point(z[i].im), RInt::point(z[j].im));
            BigFloat d = cmag_down(diff);
            if (d.sign() <= 0) return std::nullopt;  // coincident approximations
            mpfr_mul(den_down.get(), den_down.get(), d.get(), MPFR_RNDD);
        }
        BigFloat radius(prec);
        mpfr_div(radius.get(), num_up.get(), den_down.get(), MPFR_RNDU);
        mpfr_mul_ui(radius.get(), radius.get(), static_cast<unsigned long>(deg), MPFR_RNDU);
        roots.emplace_back(z[i], radius);
    }

    // Pairwise disjointness.
    BigFloat dist(prec), rsum(prec);
    for (long i = 0; i < deg; ++i)
        for (long j = i + 1; j < deg; ++j) {
            CInt diff(prec);
            diff.re = isub(RInt::point(roots[i].center.re), RInt::point(roots[j].center.re));
            diff.im = isub(RInt::point(roots[i].center.im), RInt::point(roots[j].center.im));
            dist = cmag_down(diff);
            mpfr_add(rsum.get(), roots[i].radius.get(), roots[j].radius.get(), MPFR_RNDU);
            if (mpfr_cmp(dist.get(), rsum.get()) <= 0) return std::nullopt;
        }
    return roots;
}

}  // namespace

std::optional<RHVerdict> rh_check_exact(const ZetaResult& Z, const ExactNumber& q) {
    if (Z.P.is_zero()) throw std::domain_error("zero zeta polynomial");
    if (q.sign() <= 0 || q.is_one()) throw std::domain_error("rh_check requires q > 0, q != 1");
    if (Z.P.degree() == 0) {
        RHVerdict v;
        v.status = RhStatus::holds;  // no zeros at all
        v.method = RhMethod::exact_sturm;
        return v;
    }
    if (Z.P[0].is_zero()) {
        // T = 0 is a zero and certifiedly off the circle.
        RHVerdict v;
        v.status = RhStatus::fails;
        v.method = RhMethod::exact_sturm;
        RhWitness w;
        w.description = "P(0) = 0: the zero T = 0 has |T| sqrt(q) = 0 != 1";
        w.lo = Rational(0);
        w.hi = Rational(0);
        v.witnesses.push_back(std::move(w));
        return v;
    }
    return run_exact(Z, q);
}

RHVerdict rh_check_numeric(const ZetaResult& Z, const ExactNumber& q, int precision_bits,
                           const Rational& tolerance) {
    if (Z.P.is_zero()) throw std::domain_error("zero zeta polynomial");
    if (q.sign() <= 0 || q.is_one()) throw std::domain_error("rh_check requires q > 0, q != 1");
    if (precision_bits < 32) throw std::domain_error("precision_bits must be >= 32");

    RHVerdict out;
    out.method = RhMethod::numeric_certified;
    if (Z.P.degree() == 0) {
        out.status = RhStatus::holds;
        out.precision_used = precision_bits;
        return out;
    }
    if (Z.P[0].is_zero()) {
        out.status = RhStatus::fails;
        out.method = RhMethod::ivt_witness;
        RhWitness w;
        w.description = "P(0) = 0: the zero T = 0 has |T| sqrt(q) = 0 != 1";
        w.lo = Rational(0);
        w.hi = Rational(0);
        out.witnesses.push_back(std::move(w));
        out.precision_used = precision_bits;
        return out;
    }

    // Multiplicities do not move zeros: work with the squarefree part.
    UniPoly P = squarefree_part(Z.P);

    for (int level = 0; level < 3; ++level) {
        mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits) << level;
        out.precision_used = static_cast<int>(prec);
        auto disks = isolate_disks(P, prec);
        if (!disks) continue;

        // sqrt(q) enclosure.
        RealInterval qiv = approx(q, static_cast<int>(prec));
        BigFloat sq_lo(prec), sq_hi(prec);
        mpfr_sqrt(sq_lo.get(), qiv.lo.get(), MPFR_RNDD);
        mpfr_sqrt(sq_hi.get(), qiv.hi.get(), MPFR_RNDU);

        bool any_indeterminate = false;
        std::vector<std::size_t> failing;
        BigFloat worst_dist(prec);
        for (std::size_t i = 0; i < disks->size(); ++i) {
            CertifiedRoot& root = (*disks)[i];
            BigFloat zmag_hi(prec), zmag_lo(prec), t(prec);
            mpfr_hypot(t.get(), root.center.re.get(), root.center.im.get(), MPFR_RNDU);
            mpfr_add(zmag_hi.get(), t.get(), root.radius.get(), MPFR_RNDU);
            mpfr_hypot(t.get(), root.center.re.get(), root.center.im.get(), MPFR_RNDD);
            mpfr_sub(zmag_lo.get(), t.get(), root.radius.get(), MPFR_RNDD);
            if (zmag_lo.sign() < 0) mpfr_set_zero(zmag_lo.get(), 1);

            BigFloat m_lo(prec), m_hi(prec);
            mpfr_mul(m_lo.get(), zmag_lo.get(), sq_lo.get(), MPFR_RNDD);
            mpfr_mul(m_hi.get(), zmag_hi.get(), sq_hi.get(), MPFR_RNDU);

            // dist = | |z| sqrt(q) - 1 | as an interval.
            BigFloat dist_lo(prec), dist_hi(prec);
            mpfr_sub_ui(m_lo.get(), m_lo.get(), 1, MPFR_RNDD);  // m_lo - 1
            mpfr_sub_ui(m_hi.get(), m_hi.get(), 1, MPFR_RNDU);  // m_hi - 1
            if (m_lo.sign() > 0) {
                dist_lo = m_lo;
                dist_hi = m_hi;
            } else if (m_hi.sign() < 0) {
                mpfr_neg(dist_lo.get(), m_hi.get(), MPFR_RNDD);
                mpfr_neg(dist_hi.get(), m_lo.get(), MPFR_RNDU);
            } else {
                mpfr_set_zero(dist_lo.get(), 1);
                mpfr_neg(t.get(), m_lo.get(), MPFR_RNDU);
                if (mpfr_cmp(t.get(), m_hi.get()) > 0)
                    dist_hi = t;
                else
                    dist_hi = m_hi;
            }

            if (mpfr_cmp(dist_hi.get(), worst_dist.get()) > 0) worst_dist = dist_hi;
            if (mpfr_cmp_q(dist_hi.get(), tolerance.mpq().get_mpq_t()) < 0) {
                root.circle_status = RhStatus::holds;
            } else if (mpfr_cmp_q(dist_lo.get(), tolerance.mpq().get_mpq_t()) > 0) {
                root.circle_status = RhStatus::fails;
                failing.push_back(i);
            } else {
                root.circle_status = RhStatus::indeterminate;
                any_indeterminate = true;
            }
        }

        if (!failing.empty()) {
            out.status = RhStatus::fails;
            for (std::size_t i : failing) {
                const CertifiedRoot& root = (*disks)[i];
                RhWitness w;
                w.description = "certified root disk off the circle: center " +
                                root.center.re.str(18) +
                                (root.center.im.sign() >= 0 ? "+" : "") + root.center.im.str(18) +
                                "i, radius " + root.radius.str(6);
                out.witnesses.push_back(std::move(w));
                // A real failing root also yields an exact IVT certificate.
                BigFloat t(prec);
                mpfr_abs(t.get(), root.center.im.get(), MPFR_RNDU);
                if (mpfr_cmp(t.get(), root.radius.get()) <= 0) {
                    BigFloat lo_f(prec), hi_f(prec);
                    mpfr_sub(lo_f.get(), root.center.re.get(), root.radius.get(), MPFR_RNDD);
                    mpfr_nextbelow(lo_f.get());
                    mpfr_add(hi_f.get(), root.center.re.get(), root.radius.get(), MPFR_RNDU);
                    mpfr_nextabove(hi_f.get());
                    auto iw = exact_ivt_witness(Z.P, q, lo_f.to_rational(), hi_f.to_rational(),
                                                "zero of P");
                    if (iw) {
                        out.method = RhMethod::ivt_witness;
                        out.witnesses.push_back(std::move(*iw));
                    }
                }
            }
            return out;
        }
        if (!any_indeterminate) {
            out.status = RhStatus::holds;
            RhWitness w;
            w.description =
                "all certified root disks satisfy | |T| sqrt(q) - 1 | <= " + worst_dist.str(6);
            out.witnesses.push_back(std::move(w));
            return out;
        }
    }
    out.status = RhStatus::indeterminate;
    return out;
}

RHVerdict rh_check(const ZetaResult& Z, const ExactNumber& q, int precision_bits,
                   const Rational& tolerance) {
    if (auto exact = rh_check_exact(Z, q)) {
        if (exact->status == RhStatus::fails && exact->witnesses.empty()) {
            // Harvest numeric witnesses for the report; the verdict stands.
            RHVerdict numeric = rh_check_numeric(Z, q, precision_bits, tolerance);
            exact->witnesses = std::move(numeric.witnesses);
        }
        return *exact;
    }
    return rh_check_numeric(Z, q, precision_bits, tolerance);
}

}  // namespace fwe
