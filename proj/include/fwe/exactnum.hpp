#pragma once

#include <optional>
#include <string>

#include "fwe/errors.hpp"
#include "fwe/rational.hpp"

namespace fwe {

/// Element of the scalar tower: a rational, or a + b*sqrt(d) in a real
/// quadratic field Q(sqrt(d)) with d square-free and >= 2.
///
/// Canonical form: whenever b = 0 the field tag is dropped (field_d() = 0),
/// so equal values always compare equal component-wise. Two values can be
/// combined arithmetically only when at least one is rational or both carry
/// the same d; anything else throws FieldMismatchError.
class ExactNumber {
public:
    ExactNumber() : a_(0), b_(0), d_(0) {}
    ExactNumber(long n) : a_(n), b_(0), d_(0) {}  // NOLINT(google-explicit-constructor)
    ExactNumber(Rational r) : a_(std::move(r)), b_(0), d_(0) {}  // NOLINT
    /// a + b*sqrt(d); d is normalized to its square-free kernel (sqrt(8) -> 2*sqrt(2)).
    ExactNumber(Rational a, Rational b, long long d);

    static ExactNumber sqrt_term(Rational b, long long d) { return {Rational(0), std::move(b), d}; }

    const Rational& rat() const { return a_; }
    const Rational& rad() const { return b_; }
    long long field_d() const { return d_; }
    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return d_ == 0 && a_.is_one(); }

    /// Exact sign via integer comparison of a^2 against b^2 d; no floating point.
    int sign() const;

    /// Galois conjugate a - b*sqrt(d); identity on rationals.
    ExactNumber conj() const { return is_rational() ? *this : ExactNumber(a_, -b_, d_); }

    /// Field norm a^2 - b^2 d (partial fractions denominator; nonzero for nonzero values).
    Rational norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

    ExactNumber operator-() const { return is_rational() ? ExactNumber(-a_) : ExactNumber(-a_, -b_, d_); }
    ExactNumber& operator+=(const ExactNumber& o);
    ExactNumber& operator-=(const ExactNumber& o);
    ExactNumber& operator*=(const ExactNumber& o);
    ExactNumber& operator/=(const ExactNumber& o);

    friend ExactNumber operator+(ExactNumber a, const ExactNumber& b) { return a += b; }
    friend ExactNumber operator-(ExactNumber a, const ExactNumber& b) { return a -= b; }
    friend ExactNumber operator*(ExactNumber a, const ExactNumber& b) { return a *= b; }
    friend ExactNumber operator/(ExactNumber a, const ExactNumber& b) { return a /= b; }

    friend bool operator==(const ExactNumber& x, const ExactNumber& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const ExactNumber& x, const ExactNumber& y) { return !(x == y); }

    ExactNumber inv() const;
    /// Integer power; negative exponents require a nonzero base.
    ExactNumber pow(long e) const;

    /// Exact comparison; both operands must live in a common field.
    friend bool operator<(const ExactNumber& x, const ExactNumber& y) { return (x - y).sign() < 0; }
    friend bool operator>(const ExactNumber& x, const ExactNumber& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const ExactNumber& x, const ExactNumber& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const ExactNumber& x, const ExactNumber& y) { return (x - y).sign() >= 0; }

    /// Exact-literal rendering, e.g. "4+2*sqrt(2)", "-1/27", "-1+sqrt(5)".
    /// parse(str()) round-trips exactly and str(parse(s)) is canonical.
    std::string str() const;
    static ExactNumber parse(const std::string& s);

    friend std::ostream& operator<<(std::ostream& os, const ExactNumber& x);

private:
    Rational a_, b_;
    long long d_;  // 0 = rational, else square-free >= 2
};

/// True when x and y may be combined arithmetically (rational or same field).
bool same_field(const ExactNumber& x, const ExactNumber& y);

/// The square root of x within the quadratic tower, if one exists:
/// exact nonnegative s with s*s == x, in Q, Q(sqrt(d)) of x, or a new
/// Q(sqrt(d)) when x is rational. Returns nullopt when the root is of
/// algebraic degree 4 (e.g. sqrt(4+2*sqrt(2))). Negative x throws.
std::optional<ExactNumber> sqrt_in_field(const ExactNumber& x);

}  // namespace fwe
