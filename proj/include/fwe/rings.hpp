#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fwe/homogpoly.hpp"

namespace fwe {

/// A two-generator invariant ring: an invariant generator (e.g. the
/// degree-two form) and an anti-invariant one. Classes are verified at
/// construction via make_ring.
struct RingSpec {
    ExactNumber q;
    std::optional<ExactNumber> sqrt_q;
    HomogPoly gen_inv;
    HomogPoly gen_anti;
};

/// Verifies fwe_classify(gen_inv) = invariant and
/// fwe_classify(gen_anti) = anti-invariant; sqrt_q is derived from q when
/// it exists in the tower.
RingSpec make_ring(const ExactNumber& q, HomogPoly gen_inv, HomogPoly gen_anti);

/// All (l, m) with l*deg(gen_inv) + (2m+1)*deg(gen_anti) = n, sorted by
/// descending l.
std::vector<std::pair<long, long>> ring_products(const RingSpec& ring, long n);

struct ExtremalResult {
    HomogPoly W;
    long d;
    std::vector<std::pair<std::pair<long, long>, ExactNumber>> combination;
};

/// The anti-invariant combination of the degree-n products with A_0 = 1 and
/// as many leading y-coefficients forced to zero as the linear system
/// allows; within the product span its d is maximal. Free directions left
/// after the elimination are resolved canonically (set to zero).
ExtremalResult extremal_search(const RingSpec& ring, long n);

enum class BoundKind { type_i, type_ii, type_iii, type_iv, rii_minus, genus_nonneg };

std::string to_string(BoundKind k);
BoundKind bound_kind_from_string(const std::string& s);

/// Minimum-distance upper bounds by kind:
///   type-I 2[n/8]+2, type-II 4[n/24]+4, type-III 3[n/12]+3, type-IV 2[n/6]+2,
///   RII-minus 4[(n-12)/24]+4, genus-nonneg [n/2]+1.
long distance_bound(BoundKind kind, long n);

/// Built-in two-generator rings, keyed by name (RI-, RII-, RIV-, R4/3-,
/// R4+2sqrt2-, R4-2sqrt2-, R2+2sqrt5/5-, R2-2sqrt5/5-, R8+4sqrt3-,
/// R8-4sqrt3-).
const std::vector<std::string>& ring_names();
RingSpec ring_by_name(const std::string& name);

}  // namespace fwe
