#pragma once

// Worked examples used as regression fixtures across the test suites,
// transcribed coefficient by coefficient from the published displays.

#include <initializer_list>
#include <vector>

#include "fwe/homogpoly.hpp"

namespace fwe::fixtures {

inline ExactNumber qx(const char* s) { return ExactNumber::parse(s); }

/// Degree-n polynomial supported on even powers of y: values[i] multiplies
/// x^(n-2i) y^(2i).
inline HomogPoly even_support(long n, std::initializer_list<const char*> values) {
    std::vector<ExactNumber> coeffs(static_cast<std::size_t>(n) + 1, ExactNumber(0));
    std::size_t i = 0;
    for (const char* v : values) coeffs.at(2 * i++) = qx(v);
    return HomogPoly(n, std::move(coeffs));
}

/// x^2 + (q-1) y^2, the degree-two invariant.
inline HomogPoly w2(const ExactNumber& q) {
    return HomogPoly(2, {ExactNumber(1), ExactNumber(0), q - ExactNumber(1)});
}

inline HomogPoly phi4() { return even_support(4, {"1", "-6", "1"}); }
inline HomogPoly phi6() { return even_support(6, {"1", "-5", "5/3", "-1/27"}); }
inline HomogPoly phi8plus() {
    return even_support(8, {"1", "-84-56*sqrt(2)", "1190+840*sqrt(2)", "-2772-1960*sqrt(2)",
                            "577+408*sqrt(2)"});
}
inline HomogPoly phi8minus() {
    return even_support(8, {"1", "-84+56*sqrt(2)", "1190-840*sqrt(2)", "-2772+1960*sqrt(2)",
                            "577-408*sqrt(2)"});
}
inline HomogPoly phi10plus() {
    return even_support(10, {"1", "-45-18*sqrt(5)", "378+168*sqrt(5)", "-714-1596/5*sqrt(5)",
                             "1449/5+648/5*sqrt(5)", "-61/5-682/125*sqrt(5)"});
}
inline HomogPoly phi10minus() {
    return even_support(10, {"1", "-45+18*sqrt(5)", "378-168*sqrt(5)", "-714+1596/5*sqrt(5)",
                             "1449/5-648/5*sqrt(5)", "-61/5+682/125*sqrt(5)"});
}
inline HomogPoly phi12plus() {
    return even_support(12, {"1", "-462-264*sqrt(3)", "48015+27720*sqrt(3)",
                             "-1248324-720720*sqrt(3)", "9314415+5377680*sqrt(3)",
                             "-17297742-9986856*sqrt(3)", "3650401+2107560*sqrt(3)"});
}
inline HomogPoly phi12minus() {
    return even_support(12, {"1", "-462+264*sqrt(3)", "48015-27720*sqrt(3)",
                             "-1248324+720720*sqrt(3)", "9314415-5377680*sqrt(3)",
                             "-17297742+9986856*sqrt(3)", "3650401-2107560*sqrt(3)"});
}
inline HomogPoly phi3() { return even_support(3, {"1", "-9"}); }
inline HomogPoly phi5() { return even_support(5, {"1", "-50+20*sqrt(5)", "225-100*sqrt(5)"}); }

inline HomogPoly hamming8() { return even_support(8, {"1", "0", "14", "0", "1"}); }
inline HomogPoly golay24() {
    return even_support(24, {"1", "0", "0", "0", "759", "0", "2576", "0", "759", "0", "0", "0", "1"});
}
inline HomogPoly w12() { return even_support(12, {"1", "0", "-33", "0", "-33", "0", "1"}); }

/// The extremal degree-24 enumerator for q = 4+2*sqrt(2):
/// (21/16) W_2^8 phi8+ - (5/16) phi8+^3.
inline HomogPoly extremal24() {
    return even_support(
        24, {"1", "0", "-16422-11592*sqrt(2)", "1020096+721280*sqrt(2)",
             "-33004977-23338008*sqrt(2)", "519785280+367543680*sqrt(2)",
             "-4102489300-2900898000*sqrt(2)", "17657398080+12485665920*sqrt(2)",
             "-38087686257-26932061232*sqrt(2)", "39988783296+28276339840*sqrt(2)",
             "-21850472742-15450617448*sqrt(2)", "0", "768398401+543339720*sqrt(2)"});
}

}  // namespace fwe::fixtures
