#include "fwe/homogpoly.hpp"

#include <gmpxx.h>

#include <numeric>
#include <ostream>
#include <sstream>

#include "fwe/errors.hpp"
#include "fwe/unipoly.hpp"

namespace fwe {

HomogPoly::HomogPoly(long n, std::vector<ExactNumber> coeffs) : n_(n), a_(std::move(coeffs)) {
    if (n_ < 0) throw std::domain_error("negative degree");
    if (a_.size() != static_cast<std::size_t>(n_) + 1)
        throw std::domain_error("homogeneous polynomial of degree n needs exactly n+1 coefficients");
}

HomogPoly HomogPoly::x_power(long n) {
    std::vector<ExactNumber> v(static_cast<std::size_t>(n) + 1, ExactNumber(0));
    v[0] = ExactNumber(1);
    return HomogPoly(n, std::move(v));
}

const ExactNumber& HomogPoly::coeff(long i) const {
    if (i < 0 || i > n_) throw std::out_of_range("coefficient index");
    return a_[static_cast<std::size_t>(i)];
}

bool HomogPoly::is_zero() const {
    for (const auto& c : a_)
        if (!c.is_zero()) return false;
    return true;
}

HomogPoly HomogPoly::operator-() const {
    HomogPoly r = *this;
    for (auto& c : r.a_) c = -c;
    return r;
}

HomogPoly& HomogPoly::operator+=(const HomogPoly& o) {
    if (n_ != o.n_) throw std::domain_error("degree mismatch in homogeneous sum");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

HomogPoly& HomogPoly::operator-=(const HomogPoly& o) {
    if (n_ != o.n_) throw std::domain_error("degree mismatch in homogeneous sum");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
    std::vector<ExactNumber> out(a.a_.size() + b.a_.size() - 1, ExactNumber(0));
    for (std::size_t i = 0; i < a.a_.size(); ++i) {
        if (a.a_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.a_.size(); ++j) {
            if (b.a_[j].is_zero()) continue;
            out[i + j] += a.a_[i] * b.a_[j];
        }
    }
    return HomogPoly(a.n_ + b.n_, std::move(out));
}

HomogPoly HomogPoly::scaled(const ExactNumber& s) const {
    HomogPoly r = *this;
    for (auto& c : r.a_) c *= s;
    return r;
}

HomogPoly HomogPoly::pow(long e) const {
    if (e < 0) throw std::domain_error("negative polynomial power");
    HomogPoly acc = HomogPoly::x_power(0);
    HomogPoly base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc = acc * base;
        if (k >>= 1) base = base * base;
    }
    return acc;
}

ExactNumber HomogPoly::eval(const ExactNumber& x, const ExactNumber& y) const {
    // sum a_i x^(n-i) y^i by Horner in y/...; direct powers keep it simple.
    ExactNumber acc(0), ypow(1);
    std::vector<ExactNumber> xpow(a_.size(), ExactNumber(1));
    for (std::size_t i = 1; i < xpow.size(); ++i) xpow[i] = xpow[i - 1] * x;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (!a_[i].is_zero()) acc += a_[i] * xpow[a_.size() - 1 - i] * ypow;
        ypow *= y;
    }
    return acc;
}

std::string HomogPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        const ExactNumber& c = a_[i];
        if (c.is_zero()) continue;
        bool negative = c.rat().is_zero() ? c.rad().sign() < 0 : (c.rad().is_zero() && c.rat().sign() < 0);
        ExactNumber mag = negative ? -c : c;
        if (!first) os << (negative ? "-" : "+");
        else if (negative)
            os << "-";
        first = false;
        long xe = n_ - static_cast<long>(i), ye = static_cast<long>(i);
        if (xe == 0 && ye == 0) {
            os << coefficient_factor_str(mag);
            continue;
        }
        bool printed = false;
        if (!mag.is_one()) {
            os << coefficient_factor_str(mag);
            printed = true;
        }
        if (xe > 0) {
            if (printed) os << "*";
            os << "x";
            if (xe > 1) os << "^" << xe;
            printed = true;
        }
        if (ye > 0) {
            if (printed) os << "*";
            os << "y";
            if (ye > 1) os << "^" << ye;
            printed = true;
        }
        if (!printed) os << "1";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const HomogPoly& p) { return os << p.str(); }

HomogPoly homog_combine(const std::vector<std::pair<ExactNumber, std::vector<HomogPoly>>>& terms) {
    if (terms.empty()) throw std::domain_error("empty combination");
    std::optional<HomogPoly> acc;
    for (const auto& [scalar, factors] : terms) {
        HomogPoly prod = HomogPoly::x_power(0);
        for (const auto& f : factors) prod = prod * f;
        prod = prod.scaled(scalar);
        if (!acc)
            acc = prod;
        else {
            if (acc->degree() != prod.degree())
                throw std::domain_error("combination terms of unequal total degree");
            *acc += prod;
        }
    }
    return *acc;
}

HomogPoly macwilliams_apply(const HomogPoly& W, const ExactNumber& q,
                            const std::optional<ExactNumber>& sqrt_q) {
    if (q.sign() <= 0 || q.is_one()) throw std::domain_error("transform requires q > 0, q != 1");
    long n = W.degree();

    // q^(-n/2): integer power of q for even n, of sqrt_q for odd n.
    ExactNumber scale;
    if (n % 2 == 0) {
        scale = q.pow(n / 2).inv();
    } else {
        if (!sqrt_q) throw FieldMismatchError("odd-degree transform requires an explicit sqrt(q)");
        if (*sqrt_q * *sqrt_q != q) throw std::domain_error("sqrt_q^2 != q");
        scale = sqrt_q->pow(n).inv();
    }

    ExactNumber c = q - ExactNumber(1);
    std::vector<ExactNumber> cpow(static_cast<std::size_t>(n) + 1, ExactNumber(1));
    for (std::size_t j = 1; j < cpow.size(); ++j) cpow[j] = cpow[j - 1] * c;

    auto binom = [](long a, long b) -> ExactNumber {
        if (b < 0 || b > a) return ExactNumber(0);
        mpz_class r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
        return ExactNumber(Rational(r));
    };

    // W(x+(q-1)y, x-y) = sum_i A_i (x+cy)^(n-i) (x-y)^i, expanded monomial by monomial.
    std::vector<ExactNumber> out(static_cast<std::size_t>(n) + 1, ExactNumber(0));
    for (long i = 0; i <= n; ++i) {
        const ExactNumber& ai = W.coeff(i);
        if (ai.is_zero()) continue;
        for (long t = 0; t <= n; ++t) {
            ExactNumber sum(0);
            long jlo = std::max(0L, t - i), jhi = std::min(n - i, t);
            for (long j = jlo; j <= jhi; ++j) {
                long k = t - j;
                ExactNumber term = binom(n - i, j) * cpow[static_cast<std::size_t>(j)] * binom(i, k);
                if (k % 2 != 0) term = -term;
                sum += term;
            }
            if (!sum.is_zero()) out[static_cast<std::size_t>(t)] += ai * sum;
        }
    }
    for (auto& v : out) v *= scale;
    return HomogPoly(n, std::move(out));
}

std::string to_string(SymClass k) {
    switch (k) {
        case SymClass::invariant: return "invariant";
        case SymClass::anti_invariant: return "anti-invariant";
        default: return "neither";
    }
}

SymClass fwe_classify(const HomogPoly& W, const ExactNumber& q,
                      const std::optional<ExactNumber>& sqrt_q) {
    HomogPoly t = macwilliams_apply(W, q, sqrt_q);
    if (t == -W) return SymClass::anti_invariant;
    if (t == W) return SymClass::invariant;
    return SymClass::neither;
}

WeightProfile weight_profile(const HomogPoly& W, const ExactNumber& q,
                             const std::optional<ExactNumber>& sqrt_q) {
    if (W.is_zero()) throw std::domain_error("weight profile of the zero polynomial");
    if (!W.coeff(0).is_one()) throw std::domain_error("weight profile requires leading coefficient 1");
    HomogPoly t = macwilliams_apply(W, q, sqrt_q);
    ExactNumber t0 = t.coeff(0);
    if (t0 != ExactNumber(1) && t0 != ExactNumber(-1))
        throw std::domain_error("transform has non-unit leading coefficient");

    auto min_support = [](const HomogPoly& p) -> long {
        for (long i = 1; i <= p.degree(); ++i)
            if (!p.coeff(i).is_zero()) return i;
        return -1;
    };
    long d = min_support(W);
    if (d < 0) throw std::domain_error("no nonzero coefficient with index >= 1");
    long d_perp = min_support(t);
    if (d_perp < 0) throw std::domain_error("transform has no nonzero coefficient with index >= 1");

    long c = 0;
    for (long i = 1; i <= W.degree(); ++i)
        if (!W.coeff(i).is_zero()) c = std::gcd(c, i);
    return WeightProfile{d, d_perp, c};
}

}  // namespace fwe
