#include "fwe/realroots.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "fwe/errors.hpp"
#include "fwe/numeric.hpp"

namespace fwe {

namespace {

UniPoly make_monic(const UniPoly& p) {
    if (p.is_zero() || p.leading().is_one()) return p;
    return p.scaled(p.leading().inv());
}

// Positive rational coefficient scaling keeps all evaluation signs; shrink
// numbers by clearing denominators and dividing by the integer content.
UniPoly sign_normalize(const UniPoly& p) {
    if (p.is_zero()) return p;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& c : p.coeffs()) {
        mpz_class l = lcm(c.rat().den(), c.rad().den());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), l.get_mpz_t());
    }
    for (const auto& c : p.coeffs()) {
        mpz_class na = c.rat().num() * (den_lcm / c.rat().den());
        mpz_class nb = c.rad().num() * (den_lcm / c.rad().den());
        num_gcd = gcd(num_gcd, gcd(na, nb));
    }
    if (num_gcd == 0) num_gcd = 1;
    return p.scaled(ExactNumber(Rational(den_lcm, num_gcd)));
}

}  // namespace

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& p) {
    if (p.degree() <= 0) return {};
    UniPoly f = make_monic(p);
    UniPoly a = poly_gcd(f, f.derivative());
    if (a.degree() == 0) return {f};
    UniPoly b = f.divexact(a), c = f.derivative().divexact(a);
    std::vector<UniPoly> parts;
    while (true) {
        UniPoly d = c - b.derivative();
        if (b.degree() == 0) break;
        UniPoly part = poly_gcd(b, d);
        parts.push_back(part);
        b = b.divexact(part);
        c = d.divexact(part);
    }
    return parts;
}

SturmChain::SturmChain(const UniPoly& p) {
    UniPoly f = sign_normalize(make_monic(p));
    chain_.push_back(f);
    if (f.degree() >= 1) {
        chain_.push_back(sign_normalize(f.derivative()));
        while (chain_.back().degree() >= 1) {
            UniPoly r = chain_[chain_.size() - 2].divrem(chain_.back()).second;
            if (r.is_zero()) break;
            chain_.push_back(sign_normalize(-r));
        }
    }
    // Cauchy bound for the monic representative: every root is strictly
    // inside (-B, B); |a+b*sqrt(d)| <= |a| + |b|*d is a crude safe estimate.
    UniPoly monic = make_monic(p);
    Rational maxc(0);
    for (const auto& c : monic.coeffs()) {
        Rational m = c.rat().abs() + c.rad().abs() * Rational(c.field_d() > 0 ? c.field_d() : 1);
        if (m > maxc) maxc = m;
    }
    bound_ = maxc + Rational(1);
}

long SturmChain::variations_at(const ExactNumber& x) const {
    long v = 0;
    int prev = 0;
    for (const auto& s : chain_) {
        int sg = s.eval(x).sign();
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++v;
        prev = sg;
    }
    return v;
}

long SturmChain::variations_at_infinity(int direction) const {
    long v = 0;
    int prev = 0;
    for (const auto& s : chain_) {
        if (s.is_zero()) continue;
        int sg = s.leading().sign();
        if (direction < 0 && s.degree() % 2 == 1) sg = -sg;
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++v;
        prev = sg;
    }
    return v;
}

long SturmChain::count(const ExactNumber& a, const ExactNumber& b) const {
    return variations_at(a) - variations_at(b);
}

long SturmChain::count_all() const {
    return variations_at_infinity(-1) - variations_at_infinity(+1);
}

RootBracket refine_bracket(const UniPoly& p, RootBracket b, int bits) {
    if (b.exact()) return b;
    // Steer by the sign at hi: the left endpoint may be a (different,
    // already recorded) root with p(lo) = 0, but hi never is.
    int shi = p.eval(ExactNumber(b.hi)).sign();
    Rational width_target = Rational(1, 2).pow(bits);
    while (b.hi - b.lo > width_target) {
        Rational m = b.mid();
        int sm = p.eval(ExactNumber(m)).sign();
        if (sm == 0) return {m, m};
        if (sm == shi)
            b.hi = m;
        else
            b.lo = m;
    }
    return b;
}

std::vector<RootBracket> isolate_real_roots(const UniPoly& p, int bits) {
    if (p.degree() < 1) return {};
    SturmChain chain(p);
    Rational B = chain.cauchy_bound();
    std::vector<RootBracket> out;

    struct Seg {
        Rational lo, hi;
        long count;
    };
    std::deque<Seg> work;
    long total = chain.count(ExactNumber(-B), ExactNumber(B));
    if (total > 0) work.push_back({-B, B, total});

    while (!work.empty()) {
        Seg s = work.front();
        work.pop_front();
        if (s.count == 1) {
            // (lo, hi] holds one root; hi may be the root itself.
            if (p.eval(ExactNumber(s.hi)).is_zero())
                out.push_back({s.hi, s.hi});
            else
                out.push_back(refine_bracket(p, {s.lo, s.hi}, bits));
            continue;
        }
        Rational m = (s.lo + s.hi) / Rational(2);
        bool m_is_root = p.eval(ExactNumber(m)).is_zero();
        long left = chain.count(ExactNumber(s.lo), ExactNumber(m)) - (m_is_root ? 1 : 0);
        long right = s.count - left - (m_is_root ? 1 : 0);
        if (m_is_root) out.push_back({m, m});
        if (left > 0) work.push_back({s.lo, m, left});
        if (right > 0) work.push_back({m, s.hi, right});
    }
    std::sort(out.begin(), out.end(), [](const RootBracket& a, const RootBracket& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    return out;
}

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::domain_error("empty interval");
    if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
    if (hi.sign() < 0) return -simplest_rational_in(-hi, -lo);
    // 0 < lo <= hi: the smallest integer in range if any, else recurse on
    // the fractional parts (Stern-Brocot descent).
    mpz_class fl = lo.num() / lo.den();  // floor for positive lo
    Rational fl_r{Rational(fl)};
    if (fl_r + Rational(1) <= hi) {
        Rational c = lo.is_integer() ? lo : fl_r + Rational(1);
        return c;
    }
    if (fl_r == lo) return lo;
    Rational rec = simplest_rational_in((hi - fl_r).inv(), (lo - fl_r).inv());
    return fl_r + rec.inv();
}

// ---------------------------------------------------------------------------
// Factor recognition
// ---------------------------------------------------------------------------

namespace {

struct IntPolyView {
    Rational content;  // p = content * poly, poly primitive with positive lc
    UniPoly poly;
};

IntPolyView to_primitive(const UniPoly& p) {
    if (!p.is_rational()) throw std::domain_error("primitive part needs rational coefficients");
    if (p.is_zero()) return {Rational(0), UniPoly(p.var())};
    mpz_class den_lcm = 1;
    for (const auto& c : p.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.rat().den().get_mpz_t());
    mpz_class num_gcd = 0;
    for (const auto& c : p.coeffs()) num_gcd = gcd(num_gcd, c.rat().num() * (den_lcm / c.rat().den()));
    int lead_sign = p.leading().sign();
    if (lead_sign < 0) num_gcd = -num_gcd;
    Rational scale(den_lcm, num_gcd);  // poly = p * scale
    return {scale.inv(), p.scaled(ExactNumber(scale))};
}

// Exact quotient within Z[x]; nullopt if the division is not exact.
std::optional<UniPoly> try_divide(const UniPoly& num, const UniPoly& den) {
    auto [q, r] = num.divrem(den);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

mpz_class lc_integer(const UniPoly& p) { return p.leading().rat().num(); }

// Interval endpoints of r_i + r_j and r_i * r_j from bracket endpoints.
std::pair<Rational, Rational> sum_interval(const RootBracket& a, const RootBracket& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}
std::pair<Rational, Rational> product_interval(const RootBracket& a, const RootBracket& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return {lo, hi};
}

// Recognize the unique rational with denominator <= bound in the bracket, if
// the bracket is narrow enough to pin it down.
std::optional<Rational> bounded_rational_in(const RootBracket& b, const mpz_class& den_bound) {
    if (b.exact()) return b.lo;
    Rational r = simplest_rational_in(b.lo, b.hi);
    if (r.den() > den_bound) return std::nullopt;
    return r;
}

constexpr int kRecognitionBits = 192;

// Width so that any rational of denominator <= L in the bracket is the
// simplest one: 1/(2 L^2).
int bits_for_denominator(const mpz_class& L) {
    return 2 * static_cast<int>(mpz_sizeinbase(L.get_mpz_t(), 2)) + 4;
}

struct MpfrInterval {
    BigFloat lo, hi;
};

MpfrInterval to_mpfr(const RootBracket& b, mpfr_prec_t prec) {
    return {BigFloat::from_rational(b.lo, prec, MPFR_RNDD),
            BigFloat::from_rational(b.hi, prec, MPFR_RNDU)};
}

MpfrInterval iv_add(const MpfrInterval& a, const MpfrInterval& b) {
    MpfrInterval r{BigFloat(a.lo.prec()), BigFloat(a.lo.prec())};
    mpfr_add(r.lo.get(), a.lo.get(), b.lo.get(), MPFR_RNDD);
    mpfr_add(r.hi.get(), a.hi.get(), b.hi.get(), MPFR_RNDU);
    return r;
}

MpfrInterval iv_mul(const MpfrInterval& a, const MpfrInterval& b) {
    mpfr_prec_t prec = a.lo.prec();
    BigFloat cand(prec), lo(prec), hi(prec);
    bool first = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_srcptr x = i ? a.hi.get() : a.lo.get();
            mpfr_srcptr y = j ? b.hi.get() : b.lo.get();
            mpfr_mul(cand.get(), x, y, MPFR_RNDD);
            if (first || mpfr_cmp(cand.get(), lo.get()) < 0) mpfr_set(lo.get(), cand.get(), MPFR_RNDD);
            mpfr_mul(cand.get(), x, y, MPFR_RNDU);
            if (first || mpfr_cmp(cand.get(), hi.get()) > 0) mpfr_set(hi.get(), cand.get(), MPFR_RNDU);
            first = false;
        }
    return {lo, hi};
}

// The integer contained in [lo, hi] when there is exactly one; nullopt when
// the interval is too wide or holds none.
std::optional<mpz_class> unique_integer_in(const MpfrInterval& iv) {
    BigFloat c(iv.lo.prec()), f(iv.lo.prec());
    mpfr_ceil(c.get(), iv.lo.get());
    mpfr_floor(f.get(), iv.hi.get());
    if (mpfr_cmp(c.get(), f.get()) != 0) return std::nullopt;
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), c.get(), MPFR_RNDN);
    return z;
}

// Subset reconstruction: search for an integer factor whose roots are a
// subset of the isolated real roots. Factors are certified by exact
// division. Returns recognized factors; `work` is reduced in place.
std::vector<UniPoly> subset_split(UniPoly& work, std::vector<RootBracket> roots) {
    std::vector<UniPoly> found;
    constexpr long kMaxSubsets = 500000;
    const mpfr_prec_t prec = 384;

restart:
    if (work.degree() < 4 || roots.size() < 3) return found;
    std::vector<MpfrInterval> rv;
    rv.reserve(roots.size());
    for (const auto& b : roots) rv.push_back(to_mpfr(b, prec));
    mpz_class lc = lc_integer(work);

    long budget = kMaxSubsets;
    std::size_t m = roots.size();
    for (std::size_t k = 3; k <= static_cast<std::size_t>(work.degree()) / 2; ++k) {
        if (k > m) break;
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            if (--budget < 0) return found;
            // Expand lc * prod (x - r_i) with interval coefficients.
            std::vector<MpfrInterval> coef;
            coef.push_back({BigFloat::from_rational(Rational(lc), prec, MPFR_RNDD),
                            BigFloat::from_rational(Rational(lc), prec, MPFR_RNDU)});
            for (std::size_t t = 0; t < k; ++t) {
                const MpfrInterval& r = rv[idx[t]];
                MpfrInterval neg_r{BigFloat(prec), BigFloat(prec)};
                mpfr_neg(neg_r.lo.get(), r.hi.get(), MPFR_RNDD);
                mpfr_neg(neg_r.hi.get(), r.lo.get(), MPFR_RNDU);
                std::vector<MpfrInterval> next(coef.size() + 1,
                                               MpfrInterval{BigFloat(prec), BigFloat(prec)});
                for (std::size_t i = 0; i < coef.size(); ++i) {
                    next[i + 1] = coef[i];  // x * coef
                }
                for (std::size_t i = 0; i < coef.size(); ++i) {
                    next[i] = iv_add(next[i], iv_mul(coef[i], neg_r));
                }
                coef = std::move(next);
            }
            // coef holds descending powers? No: built ascending-in-x shifts;
            // coef[i] is the coefficient of x^i with coef[k] = lc.
            bool ok = true;
            std::vector<ExactNumber> cand(coef.size(), ExactNumber(0));
            for (std::size_t i = 0; i < coef.size() && ok; ++i) {
                auto z = unique_integer_in(coef[i]);
                if (!z)
                    ok = false;
                else
                    cand[i] = ExactNumber(Rational(*z));
            }
            if (ok) {
                UniPoly g = to_primitive(UniPoly(cand, work.var())).poly;
                if (g.degree() == static_cast<long>(k)) {
                    if (auto q = try_divide(work, g)) {
                        found.push_back(g);
                        work = to_primitive(*q).poly;
                        std::vector<RootBracket> rest;
                        for (std::size_t i = 0, t = 0; i < roots.size(); ++i) {
                            if (t < k && idx[t] == i)
                                ++t;
                            else
                                rest.push_back(roots[i]);
                        }
                        roots = std::move(rest);
                        goto restart;
                    }
                }
            }
            // next combination
            std::size_t pos = k;
            while (pos > 0 && idx[pos - 1] == m - k + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return found;
}

// Factor a primitive squarefree integer polynomial.
std::vector<UniPoly> split_squarefree(UniPoly work) {
    std::vector<UniPoly> out;
    if (work.degree() <= 1) {
        if (work.degree() == 1) out.push_back(work);
        return out;
    }
    mpz_class L = lc_integer(work);
    mpz_class La = abs(L);
    // Root-pair sums/products amplify bracket widths by the root magnitude,
    // so budget bits for the Cauchy bound as well.
    mpz_class bound_ceil = 2;
    for (const auto& c : work.coeffs()) {
        mpz_class m = abs(c.rat().num()) / La + 2;
        if (m > bound_ceil) bound_ceil = m;
    }
    int bits = std::max<int>(kRecognitionBits,
                             bits_for_denominator(La) +
                                 static_cast<int>(mpz_sizeinbase(bound_ceil.get_mpz_t(), 2)) + 8);

    std::vector<RootBracket> roots = isolate_real_roots(work, bits);

    // Rational roots: the denominator divides the leading coefficient, so a
    // narrow enough bracket pins the root down via the simplest rational.
    std::vector<RootBracket> irrational;
    for (const auto& b : roots) {
        auto r = bounded_rational_in(b, La);
        if (r && work.eval(ExactNumber(*r)).is_zero()) {
            UniPoly lin({ExactNumber(-*r), ExactNumber(1)}, work.var());
            lin = to_primitive(lin).poly;
            out.push_back(lin);
            work = to_primitive(*try_divide(work, lin)).poly;
        } else {
            irrational.push_back(b);
        }
    }

    // Quadratic factors a x^2 + b x + c: -b/a and c/a have denominators
    // dividing a | lc, so conjugate pairs are recognized from root sums and
    // products and certified by division.
    bool changed = true;
    while (changed && work.degree() >= 2 && irrational.size() >= 2) {
        changed = false;
        for (std::size_t i = 0; i < irrational.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < irrational.size() && !changed; ++j) {
                auto [slo, shi] = sum_interval(irrational[i], irrational[j]);
                auto [plo, phi] = product_interval(irrational[i], irrational[j]);
                Rational s = simplest_rational_in(slo, shi);
                Rational pr = simplest_rational_in(plo, phi);
                if (s.den() > La || pr.den() > La) continue;
                UniPoly quad({pr, -s, Rational(1)}, work.var());
                UniPoly g = to_primitive(quad).poly;
                if (auto q = try_divide(work, g)) {
                    out.push_back(g);
                    work = to_primitive(*q).poly;
                    irrational.erase(irrational.begin() + j);
                    irrational.erase(irrational.begin() + i);
                    changed = true;
                }
            }
        }
    }

    if (work.degree() >= 4) {
        auto more = subset_split(work, irrational);
        out.insert(out.end(), more.begin(), more.end());
    }
    if (work.degree() >= 1) out.push_back(work);
    return out;
}

}  // namespace

FactorList factor_rational_poly(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
    IntPolyView prim = to_primitive(p);
    FactorList result;
    result.content = prim.content;
    if (prim.poly.degree() == 0) return result;

    std::vector<UniPoly> parts = squarefree_decomposition(prim.poly);
    UniPoly rebuilt = UniPoly::constant(ExactNumber(1), p.var());
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (parts[k].degree() < 1) continue;
        IntPolyView part = to_primitive(parts[k]);
        for (UniPoly& f : split_squarefree(part.poly))
            result.factors.emplace_back(std::move(f), static_cast<int>(k) + 1);
    }
    // Distribute the monicization constants back into the content and
    // certify the full reconstruction.
    for (const auto& [f, mult] : result.factors)
        for (int i = 0; i < mult; ++i) rebuilt = rebuilt * f;
    ExactNumber ratio = prim.poly.leading() / rebuilt.leading();
    if (!ratio.is_rational()) throw InternalError("factor reconstruction left the rationals");
    result.content *= ratio.rat();
    if (rebuilt.scaled(ratio) != prim.poly) throw InternalError("factor reconstruction mismatch");

    std::sort(result.factors.begin(), result.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.str() < b.first.str();
    });
    return result;
}

UniPoly minimal_polynomial(const ExactNumber& x) {
    UniPoly raw = x.is_rational()
                      ? UniPoly({ExactNumber(-x.rat()), ExactNumber(1)}, "q")
                      : UniPoly({ExactNumber(x.norm()), ExactNumber(Rational(-2) * x.rat()),
                                 ExactNumber(1)},
                                "q");
    return to_primitive(raw).poly;
}

}  // namespace fwe
