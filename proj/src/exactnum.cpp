#include "fwe/exactnum.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "fwe/numeric.hpp"

namespace fwe {

Rational Rational::from_string(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw ParseError("malformed rational '" + s + "'", 0);
    v.canonicalize();
    if (sgn(v.get_den()) == 0) throw std::domain_error("rational with zero denominator");
    Rational r;
    r.v_ = v;
    return r;
}

Rational Rational::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    mpq_class base = v_, acc = 1;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return Rational(acc);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

namespace {

// d = kernel * square^2 with kernel square-free.
std::pair<long long, long long> squarefree_split(long long d) {
    long long kernel = d, square = 1;
    for (long long p = 2; p * p <= kernel; ++p) {
        while (kernel % (p * p) == 0) {
            kernel /= p * p;
            square *= p;
        }
    }
    return {kernel, square};
}

}  // namespace

ExactNumber::ExactNumber(Rational a, Rational b, long long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (b_.is_zero()) {
        d_ = 0;
        return;
    }
    if (d_ < 0) throw std::domain_error("negative radicand");
    if (d_ == 0) {  // b*sqrt(0) = 0
        b_ = Rational(0);
        return;
    }
    auto [kernel, square] = squarefree_split(d_);
    if (square != 1) {
        b_ *= Rational(square);
        d_ = kernel;
    }
    if (d_ == 1) {  // sqrt(1): fold into the rational part
        a_ += b_;
        b_ = Rational(0);
        d_ = 0;
    }
}

bool same_field(const ExactNumber& x, const ExactNumber& y) {
    return x.is_rational() || y.is_rational() || x.field_d() == y.field_d();
}

namespace {

long long unified_d(const ExactNumber& x, const ExactNumber& y) {
    if (!same_field(x, y))
        throw FieldMismatchError("cannot combine sqrt(" + std::to_string(x.field_d()) + ") with sqrt(" +
                                 std::to_string(y.field_d()) + ")");
    return x.is_rational() ? y.field_d() : x.field_d();
}

}  // namespace

ExactNumber& ExactNumber::operator+=(const ExactNumber& o) {
    long long d = unified_d(*this, o);
    *this = ExactNumber(a_ + o.a_, b_ + o.b_, d);
    return *this;
}

ExactNumber& ExactNumber::operator-=(const ExactNumber& o) {
    long long d = unified_d(*this, o);
    *this = ExactNumber(a_ - o.a_, b_ - o.b_, d);
    return *this;
}

ExactNumber& ExactNumber::operator*=(const ExactNumber& o) {
    long long d = unified_d(*this, o);
    Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
    Rational b = a_ * o.b_ + b_ * o.a_;
    *this = ExactNumber(std::move(a), std::move(b), d);
    return *this;
}

ExactNumber ExactNumber::inv() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (is_rational()) return ExactNumber(a_.inv());
    Rational n = norm();  // nonzero: sqrt(d) is irrational
    return ExactNumber(a_ / n, -b_ / n, d_);
}

ExactNumber& ExactNumber::operator/=(const ExactNumber& o) {
    unified_d(*this, o);  // field check before the zero check, for a clear error
    return *this *= o.inv();
}

ExactNumber ExactNumber::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    ExactNumber base = *this, acc(1);
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

int ExactNumber::sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 d exactly. Equality is
    // impossible (sqrt(d) is irrational), so the comparison is strict.
    Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(d_);
    return lhs > rhs ? sa : sb;
}

std::optional<ExactNumber> sqrt_in_field(const ExactNumber& x) {
    if (x.sign() < 0) throw std::domain_error("square root of a negative value");
    if (x.is_zero()) return ExactNumber(0);

    auto rational_sqrt = [](const Rational& r) -> std::optional<Rational> {
        mpz_class n = r.num(), d = r.den();
        if (sgn(n) < 0) return std::nullopt;
        mpz_class sn = sqrt(n), sd = sqrt(d);
        if (sn * sn == n && sd * sd == d) return Rational(sn, sd);
        return std::nullopt;
    };

    if (x.is_rational()) {
        const Rational& r = x.rat();
        if (auto s = rational_sqrt(r)) return ExactNumber(*s);
        // r = (p/q): sqrt(r) = sqrt(p*q)/q = m*sqrt(kernel)/q when p*q = kernel*m^2.
        mpz_class pq = r.num() * r.den();
        if (!pq.fits_slong_p()) return std::nullopt;  // radicand beyond the supported tag range
        auto [kernel, square] = [&] {
            long long v = pq.get_si(), k = v, s = 1;
            for (long long p = 2; p * p <= k; ++p)
                while (k % (p * p) == 0) {
                    k /= p * p;
                    s *= p;
                }
            return std::pair<long long, long long>(k, s);
        }();
        if (kernel < 2) return std::nullopt;  // perfect square already handled
        return ExactNumber(Rational(0), Rational(mpz_class(static_cast<long>(square)), r.den()), kernel);
    }

    // Solve (u + v*sqrt(d))^2 = a + b*sqrt(d): u^2 + v^2 d = a, 2uv = b.
    // Then u^2 = (a +- sqrt(a^2 - b^2 d)) / 2 with a^2 - b^2 d = norm(x) a
    // rational square; otherwise the root has degree 4 over Q.
    auto ns = rational_sqrt(x.norm());
    if (!ns) return std::nullopt;
    for (int branch = 0; branch < 2; ++branch) {
        Rational u2 = (x.rat() + (branch == 0 ? *ns : -*ns)) / Rational(2);
        if (u2.sign() < 0) continue;
        if (auto u = rational_sqrt(u2)) {
            if (u->is_zero()) continue;  // would need v*sqrt(d) with v^2 d = a, handled below
            Rational v = x.rad() / (Rational(2) * *u);
            ExactNumber s(*u, v, x.field_d());
            if (s.sign() < 0) s = -s;
            if (s * s == x) return s;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Exact-literal grammar:  INT | INT "/" POSINT | RAT (("+"|"-") RAT)? "*"? "sqrt(" POSINT ")"
// ---------------------------------------------------------------------------

namespace {

struct LiteralParser {
    const std::string& s;
    std::size_t pos = 0;

    explicit LiteralParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool accept_word(const std::string& w) {
        skip_ws();
        if (s.compare(pos, w.size(), w) == 0) {
            pos += w.size();
            return true;
        }
        return false;
    }

    mpz_class parse_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected digits", start);
        return mpz_class(s.substr(start, pos - start));
    }

    Rational parse_rational() {
        mpz_class n = parse_integer();
        if (accept('/')) {
            std::size_t at = pos;
            mpz_class d = parse_integer();
            if (sgn(d) == 0) throw ParseError("zero denominator", at);
            return Rational(n, d);
        }
        return Rational(n);
    }

    // One signed term: RAT, "sqrt(D)", or RAT "*"? "sqrt(D)".
    ExactNumber parse_term(int sign) {
        Rational coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_rational();
            have_coeff = true;
        }
        bool star = accept('*');
        if (accept_word("sqrt")) {
            std::size_t at = pos;
            if (!accept('(')) throw ParseError("expected '(' after sqrt", pos);
            mpz_class d = parse_integer();
            if (!accept(')')) throw ParseError("expected ')'", pos);
            if (sgn(d) <= 0) throw ParseError("radicand must be positive", at);
            if (!d.fits_slong_p()) throw ParseError("radicand too large", at);
            return ExactNumber(Rational(0), sign < 0 ? -coeff : coeff, d.get_si());
        }
        if (star) throw ParseError("expected sqrt(...) after '*'", pos);
        if (!have_coeff) throw ParseError("expected a number or sqrt(...)", pos);
        return ExactNumber(sign < 0 ? -coeff : coeff);
    }

    ExactNumber parse() {
        int sign = accept('-') ? -1 : (accept('+'), 1);
        ExactNumber value = parse_term(sign);
        while (!eof()) {
            int next_sign;
            if (accept('+'))
                next_sign = 1;
            else if (accept('-'))
                next_sign = -1;
            else
                throw ParseError("unexpected trailing input", pos);
            value += parse_term(next_sign);
        }
        return value;
    }
};

}  // namespace

ExactNumber ExactNumber::parse(const std::string& s) {
    LiteralParser p(s);
    if (p.eof()) throw ParseError("empty exact literal", 0);
    return p.parse();
}

std::string ExactNumber::str() const {
    if (is_rational()) return a_.str();
    std::ostringstream os;
    if (!a_.is_zero()) {
        os << a_;
        if (b_.sign() > 0) os << '+';
    }
    if (b_.is_one())
        os << "sqrt(" << d_ << ")";
    else if (b_ == Rational(-1))
        os << "-sqrt(" << d_ << ")";
    else
        os << b_ << "*sqrt(" << d_ << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExactNumber& x) { return os << x.str(); }

// ---------------------------------------------------------------------------
// Interval approximation
// ---------------------------------------------------------------------------

Rational BigFloat::to_rational() const {
    if (!mpfr_number_p(v_)) throw std::domain_error("non-finite BigFloat");
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, v_);
    Rational r(mpz_class(mpq_numref(q)), mpz_class(mpq_denref(q)));
    mpq_clear(q);
    return r;
}

std::string BigFloat::str(int digits) const {
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.*Rg", digits, v_);
    std::string out(raw);
    mpfr_free_str(raw);
    return out;
}

BigFloat BigFloat::from_rational(const Rational& r, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    BigFloat f(prec);
    mpfr_set_q(f.get(), r.mpq().get_mpq_t(), rnd);
    return f;
}

RealInterval approx(const ExactNumber& x, int precision_bits) {
    if (precision_bits < 32) throw std::domain_error("precision_bits must be >= 32");
    mpfr_prec_t prec = precision_bits + 32;  // slack so the final width meets the contract
    RealInterval iv{BigFloat(prec), BigFloat(prec)};
    mpfr_set_q(iv.lo.get(), x.rat().mpq().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(iv.hi.get(), x.rat().mpq().get_mpq_t(), MPFR_RNDU);
    if (!x.is_rational() && !x.rad().is_zero()) {
        BigFloat root_lo(prec), root_hi(prec), term_lo(prec), term_hi(prec);
        mpfr_set_si(root_lo.get(), static_cast<long>(x.field_d()), MPFR_RNDD);
        mpfr_sqrt(root_lo.get(), root_lo.get(), MPFR_RNDD);
        mpfr_set_si(root_hi.get(), static_cast<long>(x.field_d()), MPFR_RNDU);
        mpfr_sqrt(root_hi.get(), root_hi.get(), MPFR_RNDU);
        BigFloat b_lo = BigFloat::from_rational(x.rad(), prec, MPFR_RNDD);
        BigFloat b_hi = BigFloat::from_rational(x.rad(), prec, MPFR_RNDU);
        if (x.rad().sign() > 0) {
            mpfr_mul(term_lo.get(), b_lo.get(), root_lo.get(), MPFR_RNDD);
            mpfr_mul(term_hi.get(), b_hi.get(), root_hi.get(), MPFR_RNDU);
        } else {
            mpfr_mul(term_lo.get(), b_lo.get(), root_hi.get(), MPFR_RNDD);
            mpfr_mul(term_hi.get(), b_hi.get(), root_lo.get(), MPFR_RNDU);
        }
        mpfr_add(iv.lo.get(), iv.lo.get(), term_lo.get(), MPFR_RNDD);
        mpfr_add(iv.hi.get(), iv.hi.get(), term_hi.get(), MPFR_RNDU);
    }
    return iv;
}

}  // namespace fwe
