#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fwe/homogpoly.hpp"
#include "fwe/moments.hpp"

namespace fwe {

/// A persisted enumerator: exact-literal strings throughout, canonical form
/// (deserialize + reserialize is byte-identical).
struct CatalogEntry {
    std::string name;
    long n = 0;  // homogeneous degree; coeffs has n+1 literals
    Parity parity = Parity::even;
    std::string q_literal;
    std::vector<std::string> q_min_poly;  // integer coefficients, ascending
    std::vector<std::string> coeffs;
    std::optional<std::vector<std::string>> zeta_coeffs;
    std::optional<long> two_g;
    std::optional<std::string> rh_status;
    std::string source = "discovered";  // "paper" for the built-ins
};

using Catalog = std::vector<CatalogEntry>;

/// Read-only entries for every named object of the built-in collection.
const Catalog& builtin_catalog();

/// The built-in entry of that name, or the first match in `extra`.
const CatalogEntry* catalog_find(const Catalog& extra, const std::string& name);

/// Validates and canonicalizes an entry: literal syntax, coefficient count,
/// parity consistency, minimal polynomial vanishing at q, and the recorded
/// class of the built-ins. Throws std::runtime_error naming the entry.
CatalogEntry canonicalize_entry(const CatalogEntry& e);

HomogPoly entry_poly(const CatalogEntry& e);
ExactNumber entry_q(const CatalogEntry& e);

/// Builds a canonical entry from an enumerator.
CatalogEntry make_entry(const std::string& name, const HomogPoly& w, const ExactNumber& q,
                        const std::string& source);

// --- JSON (canonical: sorted keys, two-space indent, trailing newline) ---

std::string entry_to_json(const CatalogEntry& e);
CatalogEntry entry_from_json(const std::string& text);
std::string catalog_to_json(const Catalog& c);
Catalog catalog_from_json(const std::string& text);

// --- file IO ---

/// Load a catalog file; errors name the offending entry.
Catalog catalog_load(const std::string& path);
/// Atomic save: write to a temporary file, then rename over the target.
void catalog_save(const std::string& path, const Catalog& c);
/// Load (or start empty), reject duplicate names, append, save atomically.
void catalog_append(const std::string& path, const CatalogEntry& e);

// --- polynomial JSON rendering: {"n": int, "coeffs": [literals]} ---

std::string homog_to_json(const HomogPoly& w);
HomogPoly homog_from_json(const std::string& text);

}  // namespace fwe
