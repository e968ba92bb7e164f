#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "fwe/exactnum.hpp"
#include "fwe/rational.hpp"

namespace fwe {

/// RAII wrapper around mpfr_t. Value semantics; rounding mode is explicit
/// at each call site so interval code can round outward.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 128) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Exact conversion of the (dyadic) stored value to a rational.
    Rational to_rational() const;
    std::string str(int digits = 20) const;

    static BigFloat from_rational(const Rational& r, mpfr_prec_t prec, mpfr_rnd_t rnd);

private:
    mpfr_t v_;
};

/// Closed interval [lo, hi] with outward-rounded endpoints; certainly
/// contains the exact value it approximates.
struct RealInterval {
    BigFloat lo, hi;

    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    /// Certified sign: +1/-1 when the interval excludes zero, else 0.
    int sign() const {
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
        return 0;
    }
    double mid() const { return (lo.to_double() + hi.to_double()) / 2; }
};

/// Interval of width <= 2^(1-precision_bits) * max(1, |x|) certainly
/// containing x. precision_bits >= 32.
RealInterval approx(const ExactNumber& x, int precision_bits);

}  // namespace fwe
