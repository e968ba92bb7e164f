#include "fwe/rings.hpp"

#include <map>

#include "fwe/builtin.hpp"
#include "fwe/errors.hpp"

namespace fwe {

RingSpec make_ring(const ExactNumber& q, HomogPoly gen_inv, HomogPoly gen_anti) {
    RingSpec ring{q, sqrt_in_field(q), std::move(gen_inv), std::move(gen_anti)};
    if (fwe_classify(ring.gen_inv, q, ring.sqrt_q) != SymClass::invariant)
        throw std::domain_error("gen_inv is not invariant under the q-transform");
    if (fwe_classify(ring.gen_anti, q, ring.sqrt_q) != SymClass::anti_invariant)
        throw std::domain_error("gen_anti is not anti-invariant under the q-transform");
    return ring;
}

std::vector<std::pair<long, long>> ring_products(const RingSpec& ring, long n) {
    const long a = ring.gen_inv.degree(), b = ring.gen_anti.degree();
    std::vector<std::pair<long, long>> out;
    for (long l = n / a; l >= 0; --l) {
        long rest = n - l * a;
        if (rest < b || rest % b != 0) continue;
        long odd = rest / b;  // must be the odd factor 2m+1
        if (odd % 2 == 1) out.emplace_back(l, (odd - 1) / 2);
    }
    return out;
}

namespace {

// Incremental reduced row echelon form for the augmented system.
class AugmentedRref {
public:
    explicit AugmentedRref(std::size_t vars) : vars_(vars) {}

    enum class Outcome { added, redundant, infeasible };

    Outcome add(std::vector<ExactNumber> row, ExactNumber rhs) {
        row.push_back(std::move(rhs));
        for (const auto& r : rows_) {
            ExactNumber f = row[pivot_of(r)];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * r[j];
        }
        std::size_t p = 0;
        while (p < vars_ && row[p].is_zero()) ++p;
        if (p == vars_) return row.back().is_zero() ? Outcome::redundant : Outcome::infeasible;
        ExactNumber inv = row[p].inv();
        for (auto& v : row) v *= inv;
        for (auto& r : rows_) {
            ExactNumber f = r[p];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < row.size(); ++j) r[j] -= f * row[j];
        }
        rows_.push_back(std::move(row));
        return Outcome::added;
    }

    /// Particular solution with all free variables set to zero.
    std::vector<ExactNumber> solve() const {
        std::vector<ExactNumber> x(vars_, ExactNumber(0));
        for (const auto& r : rows_) x[pivot_of(r)] = r.back();
        return x;
    }

private:
    std::size_t pivot_of(const std::vector<ExactNumber>& r) const {
        std::size_t p = 0;
        while (p < vars_ && r[p].is_zero()) ++p;
        return p;
    }

    std::size_t vars_;
    std::vector<std::vector<ExactNumber>> rows_;
};

}  // namespace

ExtremalResult extremal_search(const RingSpec& ring, long n) {
    auto pairs = ring_products(ring, n);
    if (pairs.empty())
        throw std::invalid_argument("the ring has no anti-invariant products of degree " +
                                    std::to_string(n));
    std::vector<HomogPoly> products;
    products.reserve(pairs.size());
    for (auto [l, m] : pairs)
        products.push_back(ring.gen_inv.pow(l) * ring.gen_anti.pow(2 * m + 1));

    const std::size_t k = products.size();
    AugmentedRref system(k);

    auto coefficient_row = [&](long i) {
        std::vector<ExactNumber> row;
        row.reserve(k);
        for (const auto& p : products) row.push_back(p.coeff(i));
        return row;
    };

    std::vector<ExactNumber> lead = coefficient_row(0);
    bool lead_nonzero = false;
    for (const auto& v : lead) lead_nonzero = lead_nonzero || !v.is_zero();
    if (!lead_nonzero || system.add(lead, ExactNumber(1)) == AugmentedRref::Outcome::infeasible)
        throw std::domain_error("degenerate ring: every product combination has A_0 = 0");

    // Kill low-order coefficients in increasing index order, keeping every
    // constraint the system still admits.
    for (long i = 1; i < n; ++i) {
        std::vector<ExactNumber> row = coefficient_row(i);
        bool nonzero = false;
        for (const auto& v : row) nonzero = nonzero || !v.is_zero();
        if (!nonzero) continue;
        system.add(std::move(row), ExactNumber(0));  // infeasible rows are skipped
    }

    std::vector<ExactNumber> scalars = system.solve();
    HomogPoly w(n, std::vector<ExactNumber>(static_cast<std::size_t>(n) + 1, ExactNumber(0)));
    for (std::size_t j = 0; j < k; ++j) w += products[j].scaled(scalars[j]);
    if (!w.coeff(0).is_one()) throw InternalError("extremal combination lost A_0 = 1");

    ExtremalResult result;
    result.W = std::move(w);
    result.d = -1;
    for (long i = 1; i <= n; ++i)
        if (!result.W.coeff(i).is_zero()) {
            result.d = i;
            break;
        }
    if (result.d < 0) throw InternalError("extremal combination collapsed to x^n");
    for (std::size_t j = 0; j < k; ++j) result.combination.emplace_back(pairs[j], scalars[j]);
    return result;
}

namespace {
long floordiv(long a, long b) {
    long q = a / b, r = a % b;
    return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}
}  // namespace

std::string to_string(BoundKind k) {
    switch (k) {
        case BoundKind::type_i: return "type-I";
        case BoundKind::type_ii: return "type-II";
        case BoundKind::type_iii: return "type-III";
        case BoundKind::type_iv: return "type-IV";
        case BoundKind::rii_minus: return "RII-minus";
        default: return "genus-nonneg";
    }
}

BoundKind bound_kind_from_string(const std::string& s) {
    if (s == "type-I") return BoundKind::type_i;
    if (s == "type-II") return BoundKind::type_ii;
    if (s == "type-III") return BoundKind::type_iii;
    if (s == "type-IV") return BoundKind::type_iv;
    if (s == "RII-minus") return BoundKind::rii_minus;
    if (s == "genus-nonneg") return BoundKind::genus_nonneg;
    throw std::domain_error("unknown bound kind '" + s + "'");
}

long distance_bound(BoundKind kind, long n) {
    if (n < 1) throw std::domain_error("distance bound needs n >= 1");
    switch (kind) {
        case BoundKind::type_i: return 2 * floordiv(n, 8) + 2;
        case BoundKind::type_ii: return 4 * floordiv(n, 24) + 4;
        case BoundKind::type_iii: return 3 * floordiv(n, 12) + 3;
        case BoundKind::type_iv: return 2 * floordiv(n, 6) + 2;
        case BoundKind::rii_minus: return 4 * floordiv(n - 12, 24) + 4;
        default: return floordiv(n, 2) + 1;
    }
}

namespace {

const std::vector<std::pair<std::string, std::pair<const char*, const char*>>>& ring_table() {
    // name -> (invariant generator, anti-invariant generator), by catalog name
    static const std::vector<std::pair<std::string, std::pair<const char*, const char*>>> table = {
        {"RI-", {"W2q2", "phi4"}},
        {"RII-", {"WH8", "W12"}},
        {"RIV-", {"W2q4", "phi3"}},
        {"R4/3-", {"W2q4over3", "phi6"}},
        {"R4+2sqrt2-", {"W2q4plus2sqrt2", "phi8plus"}},
        {"R4-2sqrt2-", {"W2q4minus2sqrt2", "phi8minus"}},
        {"R2+2sqrt5/5-", {"W2q2plus2sqrt5over5", "phi10plus"}},
        {"R2-2sqrt5/5-", {"W2q2minus2sqrt5over5", "phi10minus"}},
        {"R8+4sqrt3-", {"W2q8plus4sqrt3", "phi12plus"}},
        {"R8-4sqrt3-", {"W2q8minus4sqrt3", "phi12minus"}},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& ring_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, gens] : ring_table()) v.push_back(name);
        return v;
    }();
    return names;
}

RingSpec ring_by_name(const std::string& name) {
    for (const auto& [key, gens] : ring_table()) {
        if (key != name) continue;
        const BuiltinEnumerator& inv = builtin_by_name(gens.first);
        const BuiltinEnumerator& anti = builtin_by_name(gens.second);
        return make_ring(inv.q, inv.w, anti.w);
    }
    throw std::out_of_range("no built-in ring named '" + name + "'");
}

}  // namespace fwe
