#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fwe/exactnum.hpp"

namespace fwe {

/// Dense univariate polynomial over ExactNumber. Coefficients are indexed by
/// exponent with trailing zeros trimmed; the zero polynomial has an empty
/// coefficient vector and degree -1. The variable label is presentation
/// metadata only (q, t, T, V, u) and is ignored by arithmetic and equality.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::string var) : var_(std::move(var)) {}
    UniPoly(std::vector<ExactNumber> coeffs, std::string var = "T")
        : c_(std::move(coeffs)), var_(std::move(var)) {
        trim();
    }

    static UniPoly constant(ExactNumber c, std::string var = "T") {
        return UniPoly({std::move(c)}, std::move(var));
    }
    static UniPoly monomial(ExactNumber c, long k, std::string var = "T");
    /// The polynomial `var` itself.
    static UniPoly variable(std::string var) { return monomial(ExactNumber(1), 1, std::move(var)); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<ExactNumber>& coeffs() const { return c_; }
    /// Coefficient of var^i; zero beyond the degree.
    const ExactNumber& operator[](std::size_t i) const;
    const ExactNumber& leading() const;

    const std::string& var() const { return var_; }
    UniPoly with_var(std::string var) const {
        UniPoly p = *this;
        p.var_ = std::move(var);
        return p;
    }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);

    UniPoly scaled(const ExactNumber& s) const;
    UniPoly pow(long e) const;

    /// Coefficients are field elements, so division with remainder is always
    /// defined for a nonzero divisor.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& divisor) const;
    /// Exact division; throws InternalError if the remainder is nonzero.
    UniPoly divexact(const UniPoly& divisor) const;

    UniPoly derivative() const;
    ExactNumber eval(const ExactNumber& x) const;
    /// Coefficient reversal x^deg * p(1/x) (trailing zeros of p shift the degree down).
    UniPoly reciprocal() const;

    /// True iff all coefficients are rational.
    bool is_rational() const;
    /// The field tag shared by the coefficients (0 if all rational); throws
    /// FieldMismatchError if two coefficients carry different tags.
    long long field_d() const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const UniPoly& p);

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<ExactNumber> c_;
    std::string var_ = "T";
};

/// Renders an ExactNumber as a factor in a product, parenthesized when it is
/// a two-term literal ("(4+2*sqrt(2))").
std::string coefficient_factor_str(const ExactNumber& c);

}  // namespace fwe
