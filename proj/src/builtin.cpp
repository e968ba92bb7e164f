#include "fwe/builtin.hpp"

#include <map>
#include <stdexcept>

namespace fwe {

namespace {

ExactNumber qx(const char* s) { return ExactNumber::parse(s); }

HomogPoly even_support(long n, std::initializer_list<const char*> values) {
    std::vector<ExactNumber> coeffs(static_cast<std::size_t>(n) + 1, ExactNumber(0));
    std::size_t i = 0;
    for (const char* v : values) coeffs.at(2 * i++) = qx(v);
    return HomogPoly(n, std::move(coeffs));
}

BuiltinEnumerator make(std::string name, HomogPoly w, const char* q, SymClass klass) {
    BuiltinEnumerator b{std::move(name), std::move(w), qx(q), std::nullopt, klass};
    b.sqrt_q = sqrt_in_field(b.q);
    return b;
}

BuiltinEnumerator make_w2(const char* suffix, const char* q) {
    ExactNumber qq = qx(q);
    HomogPoly w(2, {ExactNumber(1), ExactNumber(0), qq - ExactNumber(1)});
    return make(std::string("W2q") + suffix, std::move(w), q, SymClass::invariant);
}

std::vector<BuiltinEnumerator> build_all() {
    std::vector<BuiltinEnumerator> v;
    v.push_back(make_w2("2", "2"));
    v.push_back(make_w2("4", "4"));
    v.push_back(make_w2("4over3", "4/3"));
    v.push_back(make_w2("4plus2sqrt2", "4+2*sqrt(2)"));
    v.push_back(make_w2("4minus2sqrt2", "4-2*sqrt(2)"));
    v.push_back(make_w2("2plus2sqrt5over5", "2+2/5*sqrt(5)"));
    v.push_back(make_w2("2minus2sqrt5over5", "2-2/5*sqrt(5)"));
    v.push_back(make_w2("8plus4sqrt3", "8+4*sqrt(3)"));
    v.push_back(make_w2("8minus4sqrt3", "8-4*sqrt(3)"));

    v.push_back(make("phi4", even_support(4, {"1", "-6", "1"}), "2", SymClass::anti_invariant));
    v.push_back(
        make("phi6", even_support(6, {"1", "-5", "5/3", "-1/27"}), "4/3", SymClass::anti_invariant));
    v.push_back(make("phi8plus",
                     even_support(8, {"1", "-84-56*sqrt(2)", "1190+840*sqrt(2)",
                                      "-2772-1960*sqrt(2)", "577+408*sqrt(2)"}),
                     "4+2*sqrt(2)", SymClass::anti_invariant));
    v.push_back(make("phi8minus",
                     even_support(8, {"1", "-84+56*sqrt(2)", "1190-840*sqrt(2)",
                                      "-2772+1960*sqrt(2)", "577-408*sqrt(2)"}),
                     "4-2*sqrt(2)", SymClass::anti_invariant));
    v.push_back(make("phi10plus",
                     even_support(10, {"1", "-45-18*sqrt(5)", "378+168*sqrt(5)",
                                       "-714-1596/5*sqrt(5)", "1449/5+648/5*sqrt(5)",
                                       "-61/5-682/125*sqrt(5)"}),
                     "2+2/5*sqrt(5)", SymClass::anti_invariant));
    v.push_back(make("phi10minus",
                     even_support(10, {"1", "-45+18*sqrt(5)", "378-168*sqrt(5)",
                                       "-714+1596/5*sqrt(5)", "1449/5-648/5*sqrt(5)",
                                       "-61/5+682/125*sqrt(5)"}),
                     "2-2/5*sqrt(5)", SymClass::anti_invariant));
    v.push_back(make("phi12plus",
                     even_support(12, {"1", "-462-264*sqrt(3)", "48015+27720*sqrt(3)",
                                       "-1248324-720720*sqrt(3)", "9314415+5377680*sqrt(3)",
                                       "-17297742-9986856*sqrt(3)", "3650401+2107560*sqrt(3)"}),
                     "8+4*sqrt(3)", SymClass::anti_invariant));
    v.push_back(make("phi12minus",
                     even_support(12, {"1", "-462+264*sqrt(3)", "48015-27720*sqrt(3)",
                                       "-1248324+720720*sqrt(3)", "9314415-5377680*sqrt(3)",
                                       "-17297742+9986856*sqrt(3)", "3650401-2107560*sqrt(3)"}),
                     "8-4*sqrt(3)", SymClass::anti_invariant));
    v.push_back(make("phi3", even_support(3, {"1", "-9"}), "4", SymClass::anti_invariant));
    v.push_back(make("phi5", even_support(5, {"1", "-50+20*sqrt(5)", "225-100*sqrt(5)"}),
                     "6-2*sqrt(5)", SymClass::anti_invariant));

    v.push_back(make("WH8", even_support(8, {"1", "0", "14", "0", "1"}), "2", SymClass::invariant));
    v.push_back(make("WG24",
                     even_support(24, {"1", "0", "0", "0", "759", "0", "2576", "0", "759", "0", "0",
                                       "0", "1"}),
                     "2", SymClass::invariant));
    v.push_back(
        make("W12", even_support(12, {"1", "0", "-33", "0", "-33", "0", "1"}), "2",
             SymClass::anti_invariant));
    v.push_back(make("extremal24",
                     even_support(24, {"1", "0", "-16422-11592*sqrt(2)", "1020096+721280*sqrt(2)",
                                       "-33004977-23338008*sqrt(2)", "519785280+367543680*sqrt(2)",
                                       "-4102489300-2900898000*sqrt(2)",
                                       "17657398080+12485665920*sqrt(2)",
                                       "-38087686257-26932061232*sqrt(2)",
                                       "39988783296+28276339840*sqrt(2)",
                                       "-21850472742-15450617448*sqrt(2)", "0",
                                       "768398401+543339720*sqrt(2)"}),
                     "4+2*sqrt(2)", SymClass::anti_invariant));
    return v;
}

}  // namespace

const std::vector<BuiltinEnumerator>& builtin_enumerators() {
    static const std::vector<BuiltinEnumerator> all = build_all();
    return all;
}

const BuiltinEnumerator& builtin_by_name(const std::string& name) {
    for (const auto& b : builtin_enumerators())
        if (b.name == name) return b;
    throw std::out_of_range("no built-in catalog entry named '" + name + "'");
}

bool has_builtin(const std::string& name) {
    for (const auto& b : builtin_enumerators())
        if (b.name == name) return true;
    return false;
}

}  // namespace fwe
