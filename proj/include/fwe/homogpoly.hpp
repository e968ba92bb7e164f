#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fwe/exactnum.hpp"

namespace fwe {

/// Homogeneous bivariate polynomial of degree n given by its dense
/// coefficient vector: coeff(i) multiplies x^(n-i) y^i, i = 0..n.
class HomogPoly {
public:
    HomogPoly() : n_(0), a_{ExactNumber(0)} {}
    HomogPoly(long n, std::vector<ExactNumber> coeffs);

    /// x^n.
    static HomogPoly x_power(long n);

    long degree() const { return n_; }
    const ExactNumber& coeff(long i) const;
    const std::vector<ExactNumber>& coeffs() const { return a_; }
    bool is_zero() const;

    HomogPoly operator-() const;
    HomogPoly& operator+=(const HomogPoly& o);  // throws on mixed degrees
    HomogPoly& operator-=(const HomogPoly& o);
    friend HomogPoly operator+(HomogPoly a, const HomogPoly& b) { return a += b; }
    friend HomogPoly operator-(HomogPoly a, const HomogPoly& b) { return a -= b; }
    friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b);

    HomogPoly scaled(const ExactNumber& s) const;
    HomogPoly pow(long e) const;

    ExactNumber eval(const ExactNumber& x, const ExactNumber& y) const;

    friend bool operator==(const HomogPoly& a, const HomogPoly& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }
    friend bool operator!=(const HomogPoly& a, const HomogPoly& b) { return !(a == b); }

    /// Paper-style rendering, descending powers of x: "x^4-6*x^2*y^2+y^4".
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const HomogPoly& p);

private:
    long n_;
    std::vector<ExactNumber> a_;
};

/// Exact expansion of sum(scalar * product(factors)); all terms must be
/// homogeneous of one common total degree.
HomogPoly homog_combine(const std::vector<std::pair<ExactNumber, std::vector<HomogPoly>>>& terms);

/// The MacWilliams transform W -> q^(-n/2) W(x+(q-1)y, x-y), exactly
/// expanded. Odd-degree transforms require sqrt_q with sqrt_q^2 = q; the
/// scalar tower is never extended implicitly.
HomogPoly macwilliams_apply(const HomogPoly& W, const ExactNumber& q,
                            const std::optional<ExactNumber>& sqrt_q = std::nullopt);

enum class SymClass { invariant, anti_invariant, neither };

std::string to_string(SymClass k);

/// anti_invariant iff W^sigma = -W exactly, invariant iff W^sigma = W.
SymClass fwe_classify(const HomogPoly& W, const ExactNumber& q,
                      const std::optional<ExactNumber>& sqrt_q = std::nullopt);

struct WeightProfile {
    long d;          // minimal i >= 1 with coeff(i) != 0
    long d_perp;     // same for the transformed polynomial
    long divisor_c;  // gcd of all indices with nonzero coefficient
};

/// Minimum-distance data of W and W^sigma plus the maximal divisibility
/// witness c. Requires a nonzero W with coeff(0) = 1 whose transform has
/// constant coefficient +-1, and some nonzero coeff(i) with i >= 1.
WeightProfile weight_profile(const HomogPoly& W, const ExactNumber& q,
                             const std::optional<ExactNumber>& sqrt_q = std::nullopt);

}  // namespace fwe
