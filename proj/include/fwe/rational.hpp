#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace fwe {

/// Arbitrary-precision rational in canonical form: denominator > 0,
/// gcd(|numerator|, denominator) = 1, zero stored as 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long n, long d) { assign(mpz_class(n), mpz_class(d)); }
    Rational(mpz_class n, mpz_class d) { assign(std::move(n), std::move(d)); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    static Rational from_string(const std::string& s);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational inv() const {
        if (is_zero()) throw std::domain_error("rational inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    /// Integer power; negative exponents require a nonzero base.
    Rational pow(long e) const;

    const mpq_class& mpq() const { return v_; }

    std::string str() const { return v_.get_str(); }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    void assign(mpz_class n, mpz_class d) {
        if (sgn(d) == 0) throw std::domain_error("rational with zero denominator");
        v_ = mpq_class(std::move(n));
        v_ /= mpq_class(std::move(d));
    }

    mpq_class v_;
};

}  // namespace fwe
