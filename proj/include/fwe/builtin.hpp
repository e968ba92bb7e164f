#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fwe/homogpoly.hpp"

namespace fwe {

/// A named enumerator from the built-in catalog, with the q it belongs to
/// and its verified symmetry class.
struct BuiltinEnumerator {
    std::string name;
    HomogPoly w;
    ExactNumber q;
    std::optional<ExactNumber> sqrt_q;  // when representable in the tower
    SymClass klass;
};

/// Compiled-in catalog: the degree-two invariants for every admissible q,
/// the divisible enumerator families, the classical code enumerators, and
/// the extremal degree-24 example.
const std::vector<BuiltinEnumerator>& builtin_enumerators();

const BuiltinEnumerator& builtin_by_name(const std::string& name);
bool has_builtin(const std::string& name);

}  // namespace fwe
