#include "fwe/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "fwe/builtin.hpp"
#include "fwe/catalog.hpp"
#include "fwe/conjecture.hpp"
#include "fwe/errors.hpp"
#include "fwe/moments.hpp"
#include "fwe/realroots.hpp"
#include "fwe/rh.hpp"
#include "fwe/rings.hpp"
#include "fwe/zeta.hpp"

namespace fwe {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string factored_str(const UniPoly& d) {
    FactorList fl = factor_rational_poly(d);
    std::ostringstream os;
    os << fl.content.str();
    for (const auto& [f, mult] : fl.factors) {
        os << " * (" << f.str() << ")";
        if (mult > 1) os << "^" << mult;
    }
    return os.str();
}

json candidate_json(const CandidateQ& c, bool is_new) {
    json j;
    j["q"] = c.q.str();
    if (c.t) j["sqrt_q"] = c.t->str();
    std::vector<std::string> mp;
    for (const auto& v : c.minimal_polynomial.coeffs()) mp.push_back(v.str());
    j["min_poly"] = mp;
    j["multiplicity"] = c.multiplicity;
    j["new"] = is_new;
    return j;
}

json verdict_json(const RHVerdict& v) {
    json j;
    j["status"] = to_string(v.status);
    j["method"] = to_string(v.method);
    j["precision_bits"] = v.precision_used;
    json ws = json::array();
    for (const auto& w : v.witnesses) {
        json wj;
        wj["description"] = w.description;
        if (w.lo) wj["lo"] = w.lo->str();
        if (w.hi) wj["hi"] = w.hi->str();
        ws.push_back(wj);
    }
    j["witnesses"] = ws;
    return j;
}

void print_verdict(const RHVerdict& v) {
    std::cout << "status: " << to_string(v.status) << "\n";
    std::cout << "method: " << to_string(v.method) << "\n";
    if (v.precision_used > 0) std::cout << "precision bits: " << v.precision_used << "\n";
    for (const auto& w : v.witnesses) std::cout << "witness: " << w.description << "\n";
}

// Resolve --entry/--file to an enumerator and its q.
std::pair<HomogPoly, ExactNumber> resolve_entry(const std::string& entry, const std::string& file,
                                                const std::string& catalog_path) {
    if (!entry.empty()) {
        Catalog extra;
        if (!catalog_path.empty()) extra = catalog_load(catalog_path);
        const CatalogEntry* e = catalog_find(extra, entry);
        if (!e) throw std::runtime_error("no catalog entry named '" + entry + "'");
        return {entry_poly(*e), entry_q(*e)};
    }
    CatalogEntry e = entry_from_json(read_file(file));
    return {entry_poly(e), entry_q(e)};
}

int cmd_search(long degree, const std::string& parity_s, bool as_json) {
    Parity parity = parity_from_string(parity_s);
    if (degree < 2 || (parity == Parity::even) != (degree % 2 == 0))
        throw std::runtime_error("degree must be >= 2 and match the parity");
    long n = parity == Parity::even ? degree / 2 : (degree - 1) / 2;
    if (n < 1) throw std::runtime_error("degree too small for the odd family");

    MomentMatrix m = moment_matrix(n, parity);
    UniPoly det = poly_det(m);
    CandidateSearch found = candidate_q(det, parity);

    // A candidate is newly admissible at this degree when the previous
    // moment determinant does not vanish at it.
    std::optional<UniPoly> prev_det;
    if (n >= 2) prev_det = poly_det(moment_matrix(n - 1, parity));
    auto is_new = [&](const CandidateQ& c) {
        if (!prev_det) return true;
        ExactNumber point = parity == Parity::even ? c.q : *c.t;
        return !prev_det->eval(point).is_zero();
    };

    json out;
    out["degree"] = degree;
    out["parity"] = parity_s;
    out["determinant"] = det.str();
    out["determinant_factored"] = factored_str(det);
    out["candidates"] = json::array();
    out["enumerators"] = json::array();

    if (!as_json) {
        std::cout << "moment determinant (n=" << n << ", " << parity_s << "): " << det.str() << "\n";
        std::cout << "factored: " << factored_str(det) << "\n";
        if (!found.unresolved.empty()) {
            for (const auto& u : found.unresolved)
                std::cout << "unresolved factor (degree " << u.degree() << "): " << u.str() << "\n";
        }
    }
    for (const auto& c : found.candidates) {
        bool fresh = is_new(c);
        out["candidates"].push_back(candidate_json(c, fresh));
        if (!as_json) {
            std::cout << "q = " << c.q.str();
            if (c.multiplicity > 1) std::cout << " (multiplicity " << c.multiplicity << ")";
            std::cout << (fresh ? "  [new]" : "") << "\n";
        }
        if (!fresh) continue;
        for (const auto& w : construct_enumerator(n, parity, c)) {
            json ej;
            ej["q"] = c.q.str();
            std::vector<std::string> coeffs;
            for (const auto& v : w.coeffs()) coeffs.push_back(v.str());
            ej["coeffs"] = coeffs;
            out["enumerators"].push_back(ej);
            if (!as_json) std::cout << "  W = " << w.str() << "\n";
        }
    }
    if (!found.unresolved.empty()) {
        out["unresolved"] = json::array();
        for (const auto& u : found.unresolved) out["unresolved"].push_back(u.str());
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_construct(long n, const std::string& parity_s, const std::string& q_literal, bool as_json) {
    Parity parity = parity_from_string(parity_s);
    CandidateQ cand;
    cand.q = ExactNumber::parse(q_literal);
    cand.t = sqrt_in_field(cand.q);
    cand.minimal_polynomial = minimal_polynomial(cand.q);
    if (parity == Parity::odd && !cand.t)
        throw std::runtime_error("odd-degree construction needs sqrt(q) inside the tower");
    ExactNumber point = parity == Parity::even ? cand.q : *cand.t;
    if (!poly_det(moment_matrix(n, parity)).eval(point).is_zero())
        throw std::runtime_error("the moment determinant does not vanish at q = " + q_literal);

    auto ws = construct_enumerator(n, parity, cand);
    if (as_json) {
        json out = json::array();
        for (const auto& w : ws) out.push_back(json::parse(homog_to_json(w)));
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& w : ws) std::cout << w.str() << "\n";
    }
    return 0;
}

int cmd_zeta(const std::string& entry, const std::string& file, const std::string& catalog_path,
             bool as_json) {
    auto [w, q] = resolve_entry(entry, file, catalog_path);
    ZetaResult z = zeta_poly(w, q);
    bool fe = z.sign() != 0 && functional_eq_check(z, q, sqrt_in_field(q));
    if (as_json) {
        json out;
        out["P"] = z.P.str();
        std::vector<std::string> coeffs;
        for (const auto& c : z.P.coeffs()) coeffs.push_back(c.str());
        out["zeta_coeffs"] = coeffs;
        out["two_g"] = z.two_g;
        out["class"] = to_string(z.klass);
        out["functional_equation"] = fe;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "P(T) = " << z.P.str() << "\n";
        std::cout << "2g = " << z.two_g << ", class: " << to_string(z.klass) << "\n";
        std::cout << "functional equation: " << (fe ? "satisfied" : "not applicable") << "\n";
    }
    return 0;
}

int cmd_rh(const std::string& entry, const std::string& file, const std::string& catalog_path,
           int precision_bits, const std::string& tolerance_s, bool as_json) {
    auto [w, q] = resolve_entry(entry, file, catalog_path);
    Rational tolerance = default_rh_tolerance();
    if (!tolerance_s.empty()) {
        ExactNumber t = ExactNumber::parse(tolerance_s);
        if (!t.is_rational() || t.sign() <= 0) throw std::runtime_error("tolerance must be a positive rational");
        tolerance = t.rat();
    }
    ZetaResult z = zeta_poly(w, q);
    RHVerdict v = rh_check(z, q, precision_bits, tolerance);
    if (as_json)
        std::cout << verdict_json(v).dump(2) << "\n";
    else {
        std::cout << "P(T) = " << z.P.str() << "\n";
        print_verdict(v);
    }
    return v.status == RhStatus::indeterminate ? 2 : 0;
}

int cmd_extremal(const std::string& ring_name, const std::string& gen_inv_file,
                 const std::string& gen_anti_file, const std::string& q_literal, long degree,
                 bool as_json) {
    RingSpec ring = [&] {
        if (!ring_name.empty()) return ring_by_name(ring_name);
        if (gen_inv_file.empty() || gen_anti_file.empty() || q_literal.empty())
            throw std::runtime_error("either --ring or all of --gen-inv/--gen-anti/--q are required");
        return make_ring(ExactNumber::parse(q_literal), homog_from_json(read_file(gen_inv_file)),
                         homog_from_json(read_file(gen_anti_file)));
    }();
    ExtremalResult r = extremal_search(ring, degree);
    if (as_json) {
        json out;
        out["degree"] = degree;
        out["d"] = r.d;
        out["W"] = json::parse(homog_to_json(r.W));
        json comb = json::array();
        for (const auto& [lm, c] : r.combination) {
            json cj;
            cj["l"] = lm.first;
            cj["m"] = lm.second;
            cj["scalar"] = c.str();
            comb.push_back(cj);
        }
        out["combination"] = comb;
        out["genus_bound"] = distance_bound(BoundKind::genus_nonneg, degree);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "W = " << r.W.str() << "\n";
        std::cout << "d = " << r.d << "\n";
        for (const auto& [lm, c] : r.combination)
            std::cout << "  (l=" << lm.first << ", m=" << lm.second << "): " << c.str() << "\n";
    }
    return 0;
}

int cmd_conjecture(long max_n, bool as_json) {
    ChebyshevReport report = verify_conjecture(max_n);
    if (as_json) {
        json rows = json::array();
        for (const auto& r : report.results) {
            json j;
            j["n"] = r.n;
            j["holds"] = r.holds;
            if (!r.holds) {
                j["lhs"] = r.lhs.str();
                j["rhs"] = r.rhs.str();
            }
            rows.push_back(j);
        }
        json out;
        out["max_n"] = report.n_max;
        out["all_hold"] = report.all_hold();
        out["results"] = rows;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : report.results) {
            std::cout << "n = " << r.n << ": " << (r.holds ? "holds" : "FAILS") << "\n";
            if (!r.holds) {
                std::cout << "  determinant: " << r.lhs.str() << "\n";
                std::cout << "  identity rhs: " << r.rhs.str() << "\n";
            }
        }
    }
    return report.all_hold() ? 0 : 3;
}

int cmd_catalog(const std::string& op, const std::string& name, const std::string& catalog_path,
                const std::string& entry_json_path, bool as_json) {
    if (op == "list") {
        Catalog extra;
        if (!catalog_path.empty()) extra = catalog_load(catalog_path);
        if (as_json) {
            Catalog all = builtin_catalog();
            all.insert(all.end(), extra.begin(), extra.end());
            std::cout << catalog_to_json(all);
        } else {
            for (const auto& e : builtin_catalog())
                std::cout << e.name << "  (n=" << e.n << ", q=" << e.q_literal << ", " << e.source
                          << ")\n";
            for (const auto& e : extra)
                std::cout << e.name << "  (n=" << e.n << ", q=" << e.q_literal << ", " << e.source
                          << ")\n";
        }
        return 0;
    }
    if (op == "show") {
        if (name.empty()) throw std::runtime_error("catalog show needs a name");
        Catalog extra;
        if (!catalog_path.empty()) extra = catalog_load(catalog_path);
        const CatalogEntry* e = catalog_find(extra, name);
        if (!e) throw std::runtime_error("no catalog entry named '" + name + "'");
        if (as_json)
            std::cout << entry_to_json(*e);
        else {
            std::cout << e->name << ": " << entry_poly(*e).str() << "\n";
            std::cout << "q = " << e->q_literal << ", source: " << e->source << "\n";
        }
        return 0;
    }
    if (op == "add") {
        if (catalog_path.empty()) throw std::runtime_error("catalog add needs --file");
        if (entry_json_path.empty()) throw std::runtime_error("catalog add needs --entry-json");
        CatalogEntry e = entry_from_json(read_file(entry_json_path));
        catalog_append(catalog_path, e);
        std::cout << "added '" << e.name << "' to " << catalog_path << "\n";
        return 0;
    }
    throw std::runtime_error("catalog operation must be list, show or add");
}

}  // namespace

int run_command(int argc, const char* const* argv) {
    CLI::App app{"Exact search and analysis of divisible formal weight enumerators"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    auto* search = app.add_subcommand("search", "search one degree for admissible q and enumerators");
    long degree = 0;
    std::string parity_s = "even";
    search->add_option("--degree", degree, "degree of the enumerator")->required();
    search->add_option("--parity", parity_s, "even or odd")->required();

    auto* construct = app.add_subcommand("construct", "construct enumerators for an explicit q");
    long cn = 0;
    std::string cparity = "even", cq;
    construct->add_option("--n", cn, "moment index n")->required();
    construct->add_option("--parity", cparity, "even or odd")->required();
    construct->add_option("--q", cq, "exact literal, e.g. 4+2*sqrt(2)")->required();

    auto* zeta = app.add_subcommand("zeta", "zeta polynomial of a catalog entry or file");
    std::string zentry, zfile, zcatalog;
    zeta->add_option("--entry", zentry, "catalog entry name");
    zeta->add_option("--file", zfile, "entry JSON file");
    zeta->add_option("--catalog", zcatalog, "user catalog file");

    auto* rh = app.add_subcommand("rh", "Riemann hypothesis verdict for a catalog entry");
    std::string rentry, rfile, rcatalog, rtol;
    int rbits = 256;
    rh->add_option("--entry", rentry, "catalog entry name");
    rh->add_option("--file", rfile, "entry JSON file");
    rh->add_option("--catalog", rcatalog, "user catalog file");
    rh->add_option("--precision-bits", rbits, "working precision for the numeric path");
    rh->add_option("--tolerance", rtol, "rational tolerance literal, e.g. 1/1000000");

    auto* extremal = app.add_subcommand("extremal", "extremal enumerator of a ring at a degree");
    std::string ering, einv, eanti, eq;
    long edegree = 0;
    extremal->add_option("--ring", ering, "built-in ring name, e.g. RI- or R4+2sqrt2-");
    extremal->add_option("--gen-inv", einv, "invariant generator JSON file");
    extremal->add_option("--gen-anti", eanti, "anti-invariant generator JSON file");
    extremal->add_option("--q", eq, "q literal for explicit generators");
    extremal->add_option("--degree", edegree, "degree to search")->required();

    auto* conjecture = app.add_subcommand("conjecture", "verify the determinant-ratio identity");
    long max_n = 12;
    conjecture->add_option("--max-n", max_n, "verify n = 2..max-n")->required();

    auto* catalog = app.add_subcommand("catalog", "list, show or extend the enumerator catalog");
    std::string cop, cname, cfile, centry_json;
    catalog->add_option("op", cop, "list | show | add")->required();
    catalog->add_option("name", cname, "entry name (for show)");
    catalog->add_option("--file", cfile, "user catalog file");
    catalog->add_option("--entry-json", centry_json, "entry JSON to add");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors are exit 1; --help is 0
    }

    try {
        if (search->parsed()) return cmd_search(degree, parity_s, as_json);
        if (construct->parsed()) return cmd_construct(cn, cparity, cq, as_json);
        if (zeta->parsed()) return cmd_zeta(zentry, zfile, zcatalog, as_json);
        if (rh->parsed()) return cmd_rh(rentry, rfile, rcatalog, rbits, rtol, as_json);
        if (extremal->parsed()) return cmd_extremal(ering, einv, eanti, eq, edegree, as_json);
        if (conjecture->parsed()) return cmd_conjecture(max_n, as_json);
        if (catalog->parsed()) return cmd_catalog(cop, cname, cfile, centry_json, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace fwe
