#include "fwe/catalog.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fwe/builtin.hpp"
#include "fwe/errors.hpp"
#include "fwe/realroots.hpp"

namespace fwe {

using nlohmann::json;

namespace {

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json entry_json(const CatalogEntry& e) {
    json q;
    q["literal"] = e.q_literal;
    q["min_poly"] = e.q_min_poly;
    json j;
    j["name"] = e.name;
    j["n"] = e.n;
    j["parity"] = to_string(e.parity);
    j["q"] = q;
    j["coeffs"] = e.coeffs;
    if (e.zeta_coeffs) j["zeta_coeffs"] = *e.zeta_coeffs;
    if (e.two_g) j["two_g"] = *e.two_g;
    if (e.rh_status) j["rh_status"] = *e.rh_status;
    j["source"] = e.source;
    return j;
}

CatalogEntry entry_parse(const json& j) {
    CatalogEntry e;
    e.name = j.at("name").get<std::string>();
    e.n = j.at("n").get<long>();
    e.parity = parity_from_string(j.at("parity").get<std::string>());
    e.q_literal = j.at("q").at("literal").get<std::string>();
    e.q_min_poly = j.at("q").at("min_poly").get<std::vector<std::string>>();
    e.coeffs = j.at("coeffs").get<std::vector<std::string>>();
    if (j.contains("zeta_coeffs")) e.zeta_coeffs = j.at("zeta_coeffs").get<std::vector<std::string>>();
    if (j.contains("two_g")) e.two_g = j.at("two_g").get<long>();
    if (j.contains("rh_status")) e.rh_status = j.at("rh_status").get<std::string>();
    e.source = j.at("source").get<std::string>();
    return e;
}

}  // namespace

HomogPoly entry_poly(const CatalogEntry& e) {
    std::vector<ExactNumber> c;
    c.reserve(e.coeffs.size());
    for (const auto& s : e.coeffs) c.push_back(ExactNumber::parse(s));
    return HomogPoly(e.n, std::move(c));
}

ExactNumber entry_q(const CatalogEntry& e) { return ExactNumber::parse(e.q_literal); }

CatalogEntry canonicalize_entry(const CatalogEntry& e) {
    try {
        CatalogEntry out = e;
        if (e.name.empty()) throw std::runtime_error("empty name");
        if (e.coeffs.size() != static_cast<std::size_t>(e.n) + 1)
            throw std::runtime_error("coeffs must hold n+1 literals");
        if ((e.n % 2 == 0) != (e.parity == Parity::even))
            throw std::runtime_error("parity does not match the degree");
        ExactNumber q = ExactNumber::parse(e.q_literal);
        if (q.sign() <= 0 || q.is_one()) throw std::runtime_error("q must be positive and != 1");
        out.q_literal = q.str();
        UniPoly mp = minimal_polynomial(q);
        std::vector<std::string> mp_strings;
        for (const auto& c : mp.coeffs()) mp_strings.push_back(c.str());
        if (!e.q_min_poly.empty() && e.q_min_poly != mp_strings) {
            // Accept any integer polynomial that vanishes at q...
            std::vector<ExactNumber> given;
            for (const auto& s : e.q_min_poly) given.push_back(ExactNumber::parse(s));
            if (!UniPoly(given, "q").eval(q).is_zero())
                throw std::runtime_error("min_poly does not vanish at q");
        }
        out.q_min_poly = mp_strings;  // ...but store the canonical one
        for (auto& s : out.coeffs) s = ExactNumber::parse(s).str();
        if (out.zeta_coeffs)
            for (auto& s : *out.zeta_coeffs) s = ExactNumber::parse(s).str();
        if (out.source != "paper" && out.source != "discovered")
            throw std::runtime_error("source must be 'paper' or 'discovered'");
        return out;
    } catch (const std::exception& ex) {
        throw std::runtime_error("catalog entry '" + e.name + "': " + ex.what());
    }
}

CatalogEntry make_entry(const std::string& name, const HomogPoly& w, const ExactNumber& q,
                        const std::string& source) {
    CatalogEntry e;
    e.name = name;
    e.n = w.degree();
    e.parity = w.degree() % 2 == 0 ? Parity::even : Parity::odd;
    e.q_literal = q.str();
    for (const auto& c : w.coeffs()) e.coeffs.push_back(c.str());
    e.source = source;
    return canonicalize_entry(e);
}

const Catalog& builtin_catalog() {
    static const Catalog catalog = [] {
        Catalog c;
        for (const auto& b : builtin_enumerators()) c.push_back(make_entry(b.name, b.w, b.q, "paper"));
        return c;
    }();
    return catalog;
}

const CatalogEntry* catalog_find(const Catalog& extra, const std::string& name) {
    for (const auto& e : builtin_catalog())
        if (e.name == name) return &e;
    for (const auto& e : extra)
        if (e.name == name) return &e;
    return nullptr;
}

std::string entry_to_json(const CatalogEntry& e) { return canonical_dump(entry_json(e)); }

CatalogEntry entry_from_json(const std::string& text) {
    return canonicalize_entry(entry_parse(json::parse(text)));
}

std::string catalog_to_json(const Catalog& c) {
    json entries = json::array();
    for (const auto& e : c) entries.push_back(entry_json(e));
    json j;
    j["entries"] = entries;
    return canonical_dump(j);
}

Catalog catalog_from_json(const std::string& text) {
    json j = json::parse(text);
    Catalog c;
    for (const auto& item : j.at("entries")) c.push_back(canonicalize_entry(entry_parse(item)));
    return c;
}

Catalog catalog_load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return catalog_from_json(buf.str());
    } catch (const json::exception& ex) {
        throw std::runtime_error("catalog file '" + path + "' is not well-formed JSON: " + ex.what());
    }
}

void catalog_save(const std::string& path, const Catalog& c) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
        out << catalog_to_json(c);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("atomic rename onto '" + path + "' failed");
    }
}

void catalog_append(const std::string& path, const CatalogEntry& e) {
    Catalog c;
    if (std::ifstream probe(path); probe.good()) c = catalog_load(path);
    CatalogEntry entry = canonicalize_entry(e);
    for (const auto& existing : c)
        if (existing.name == entry.name)
            throw std::runtime_error("catalog already holds an entry named '" + entry.name + "'");
    c.push_back(std::move(entry));
    catalog_save(path, c);
}

std::string homog_to_json(const HomogPoly& w) {
    json j;
    j["n"] = w.degree();
    std::vector<std::string> coeffs;
    for (const auto& c : w.coeffs()) coeffs.push_back(c.str());
    j["coeffs"] = coeffs;
    return canonical_dump(j);
}

HomogPoly homog_from_json(const std::string& text) {
    json j = json::parse(text);
    long n = j.at("n").get<long>();
    std::vector<ExactNumber> c;
    for (const auto& s : j.at("coeffs").get<std::vector<std::string>>())
        c.push_back(ExactNumber::parse(s));
    return HomogPoly(n, std::move(c));
}

}  // namespace fwe
