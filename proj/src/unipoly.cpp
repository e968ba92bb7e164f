#include "fwe/unipoly.hpp"

#include <ostream>
#include <sstream>

#include "fwe/errors.hpp"

namespace fwe {

namespace {
const ExactNumber kZero(0);
}

UniPoly UniPoly::monomial(ExactNumber c, long k, std::string var) {
    std::vector<ExactNumber> v(static_cast<std::size_t>(k) + 1, ExactNumber(0));
    v.back() = std::move(c);
    return UniPoly(std::move(v), std::move(var));
}

const ExactNumber& UniPoly::operator[](std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const ExactNumber& UniPoly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ExactNumber(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ExactNumber(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.var());
    std::vector<ExactNumber> out(a.c_.size() + b.c_.size() - 1, ExactNumber(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            out[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return UniPoly(std::move(out), a.var());
}

UniPoly UniPoly::scaled(const ExactNumber& s) const {
    if (s.is_zero()) return UniPoly(var_);
    UniPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

UniPoly UniPoly::pow(long e) const {
    if (e < 0) throw std::domain_error("negative polynomial power");
    UniPoly acc = UniPoly::constant(ExactNumber(1), var_);
    UniPoly base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc = acc * base;
        if (k >>= 1) base = base * base;
    }
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    UniPoly rem = *this;
    if (rem.degree() < divisor.degree()) return {UniPoly(var_), rem};
    ExactNumber lead_inv = divisor.leading().inv();
    std::vector<ExactNumber> q(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1,
                               ExactNumber(0));
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        long shift = rem.degree() - divisor.degree();
        ExactNumber f = rem.leading() * lead_inv;
        q[static_cast<std::size_t>(shift)] = f;
        for (std::size_t i = 0; i < divisor.c_.size(); ++i)
            rem.c_[i + static_cast<std::size_t>(shift)] -= f * divisor.c_[i];
        rem.trim();
    }
    return {UniPoly(std::move(q), var_), rem};
}

UniPoly UniPoly::divexact(const UniPoly& divisor) const {
    auto [q, r] = divrem(divisor);
    if (!r.is_zero()) throw InternalError("inexact polynomial division");
    return q;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly(var_);
    std::vector<ExactNumber> out(c_.size() - 1, ExactNumber(0));
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * ExactNumber(static_cast<long>(i));
    return UniPoly(std::move(out), var_);
}

ExactNumber UniPoly::eval(const ExactNumber& x) const {
    ExactNumber acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UniPoly UniPoly::reciprocal() const {
    std::vector<ExactNumber> out(c_.rbegin(), c_.rend());
    return UniPoly(std::move(out), var_);
}

bool UniPoly::is_rational() const {
    for (const auto& c : c_)
        if (!c.is_rational()) return false;
    return true;
}

long long UniPoly::field_d() const {
    long long d = 0;
    for (const auto& c : c_) {
        if (c.is_rational()) continue;
        if (d == 0)
            d = c.field_d();
        else if (d != c.field_d())
            throw FieldMismatchError("polynomial mixes sqrt(" + std::to_string(d) + ") and sqrt(" +
                                     std::to_string(c.field_d()) + ")");
    }
    return d;
}

std::string coefficient_factor_str(const ExactNumber& c) {
    bool composite = !c.rat().is_zero() && !c.rad().is_zero();
    return composite ? "(" + c.str() + ")" : c.str();
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const ExactNumber& c = c_[i];
        if (c.is_zero()) continue;
        // Sign handling: a literal is "subtractable" when it renders with a
        // single leading minus (negative rational or negative radical-only).
        bool negative = c.rat().is_zero() ? c.rad().sign() < 0 : (c.rad().is_zero() && c.rat().sign() < 0);
        ExactNumber mag = negative ? -c : c;
        if (!first) os << (negative ? "-" : "+");
        else if (negative)
            os << "-";
        first = false;
        if (i == 0) {
            os << coefficient_factor_str(mag);
        } else {
            if (!mag.is_one()) os << coefficient_factor_str(mag) << "*";
            os << var_;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

}  // namespace fwe
