#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"
#include "fwe/catalog.hpp"
#include "fwe/cli.hpp"

using namespace fwe;
using namespace fwe::fixtures;
using nlohmann::json;

namespace {

struct CapturedRun {
    int exit_code;
    std::string out;
};

CapturedRun run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"fwe"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream captured;
    std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
    int code = run_command(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old);
    return {code, captured.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/fwe_test_" + name) { std::remove(path.c_str()); }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("catalog entries round-trip byte-identically") {
    for (const auto& e : builtin_catalog()) {
        std::string once = entry_to_json(e);
        CatalogEntry back = entry_from_json(once);
        CHECK(entry_to_json(back) == once);
        CHECK(entry_poly(back) == entry_poly(e));
    }
    std::string whole = catalog_to_json(builtin_catalog());
    CHECK(catalog_to_json(catalog_from_json(whole)) == whole);
}

TEST_CASE("built-in catalog contents") {
    const CatalogEntry* w12e = catalog_find({}, "W12");
    REQUIRE(w12e != nullptr);
    CHECK(entry_poly(*w12e) == w12());
    CHECK(w12e->coeffs == std::vector<std::string>{"1", "0", "0", "0", "-33", "0", "0", "0", "-33",
                                                   "0", "0", "0", "1"});
    const CatalogEntry* p10m = catalog_find({}, "phi10minus");
    REQUIRE(p10m != nullptr);
    CHECK(p10m->coeffs[2] == "-45+18*sqrt(5)");
    CHECK(catalog_find({}, "missing") == nullptr);
    CHECK(builtin_catalog().size() == 23);
}

TEST_CASE("catalog file IO") {
    TempFile f("catalog.json");
    SUBCASE("save then load is identical") {
        Catalog c = {make_entry("sample", phi4(), ExactNumber(2), "discovered")};
        catalog_save(f.path, c);
        Catalog back = catalog_load(f.path);
        REQUIRE(back.size() == 1);
        CHECK(back[0].name == "sample");
        CHECK(entry_poly(back[0]) == phi4());
        std::ifstream in(f.path);
        std::ostringstream buf;
        buf << in.rdbuf();
        CHECK(buf.str() == catalog_to_json(back));
    }
    SUBCASE("append rejects duplicates") {
        catalog_append(f.path, make_entry("one", phi4(), ExactNumber(2), "discovered"));
        CHECK_THROWS_WITH_AS(catalog_append(f.path, make_entry("one", phi4(), ExactNumber(2),
                                                               "discovered")),
                             doctest::Contains("one"), std::runtime_error);
    }
    SUBCASE("corrupt files name the offending entry") {
        Catalog c = {make_entry("good", phi4(), ExactNumber(2), "discovered")};
        json j = json::parse(catalog_to_json(c));
        j["entries"][0]["coeffs"] = std::vector<std::string>{"1", "0"};  // wrong length
        std::ofstream(f.path) << j.dump(2) << "\n";
        CHECK_THROWS_WITH_AS(catalog_load(f.path), doctest::Contains("good"), std::runtime_error);
        std::ofstream(f.path) << "{not json";
        CHECK_THROWS_AS(catalog_load(f.path), std::runtime_error);
    }
    SUBCASE("validation catches a wrong minimal polynomial") {
        CatalogEntry e = make_entry("weird", phi4(), ExactNumber(2), "discovered");
        e.q_min_poly = {"1", "1"};  // q + 1 does not vanish at 2
        CHECK_THROWS_WITH_AS(canonicalize_entry(e), doctest::Contains("weird"), std::runtime_error);
    }
}

TEST_CASE("polynomial JSON rendering") {
    std::string j = homog_to_json(phi6());
    HomogPoly back = homog_from_json(j);
    CHECK(back == phi6());
    CHECK(json::parse(j)["n"] == 6);
    CHECK(json::parse(j)["coeffs"][2] == "-5");
}

TEST_CASE("cli: search") {
    CapturedRun r = run_cli({"--json", "search", "--degree", "8", "--parity", "even"});
    CHECK(r.exit_code == 0);
    json out = json::parse(r.out);
    REQUIRE(out["candidates"].size() == 4);
    std::vector<std::string> qs;
    for (const auto& c : out["candidates"]) qs.push_back(c["q"]);
    CHECK(qs == std::vector<std::string>{"4/3", "2", "4-2*sqrt(2)", "4+2*sqrt(2)"});
    // the two conjugate values are new at degree 8 and get constructed
    int fresh = 0;
    for (const auto& c : out["candidates"]) fresh += c["new"].get<bool>() ? 1 : 0;
    CHECK(fresh == 2);
    REQUIRE(out["enumerators"].size() == 2);
    CHECK(out["enumerators"][1]["coeffs"][2] == "-84-56*sqrt(2)");

    CapturedRun odd = run_cli({"--json", "search", "--degree", "5", "--parity", "odd"});
    json oout = json::parse(odd.out);
    REQUIRE(oout["candidates"].size() == 2);
    CHECK(oout["candidates"][0]["q"] == "6-2*sqrt(5)");
    CHECK(oout["candidates"][0]["sqrt_q"] == "-1+sqrt(5)");

    CHECK(run_cli({"search", "--degree", "7", "--parity", "even"}).exit_code == 1);
    CHECK(run_cli({"search", "--degree", "0", "--parity", "even"}).exit_code == 1);
}

TEST_CASE("cli: construct") {
    CapturedRun r = run_cli({"--json", "construct", "--n", "3", "--parity", "even", "--q", "4/3"});
    CHECK(r.exit_code == 0);
    json out = json::parse(r.out);
    REQUIRE(out.size() == 1);
    CHECK(out[0]["coeffs"][6] == "-1/27");
    // q where the determinant is regular
    CHECK(run_cli({"construct", "--n", "2", "--parity", "even", "--q", "3"}).exit_code == 1);
    // malformed literal
    CHECK(run_cli({"construct", "--n", "2", "--parity", "even", "--q", "wat"}).exit_code == 1);
}

TEST_CASE("cli: zeta and rh") {
    CapturedRun z = run_cli({"--json", "zeta", "--entry", "W12"});
    CHECK(z.exit_code == 0);
    json zj = json::parse(z.out);
    CHECK(zj["two_g"] == 6);
    CHECK(zj["class"] == "anti-invariant");
    CHECK(zj["functional_equation"] == true);

    CapturedRun holds = run_cli({"--json", "rh", "--entry", "phi4"});
    CHECK(holds.exit_code == 0);
    CHECK(json::parse(holds.out)["status"] == "holds");
    CHECK(json::parse(holds.out)["method"] == "exact-sturm");

    CapturedRun fails = run_cli({"--json", "rh", "--entry", "phi8plus"});
    CHECK(fails.exit_code == 0);  // a delivered verdict is a success
    json fj = json::parse(fails.out);
    CHECK(fj["status"] == "fails");
    CHECK(fj["witnesses"].size() > 0);

    CHECK(run_cli({"rh", "--entry", "no-such-entry"}).exit_code == 1);
}

TEST_CASE("cli: extremal") {
    CapturedRun r = run_cli({"--json", "extremal", "--ring", "R4+2sqrt2-", "--degree", "24"});
    CHECK(r.exit_code == 0);
    json out = json::parse(r.out);
    CHECK(out["d"] == 4);
    CHECK(out["combination"][0]["scalar"] == "21/16");
    CHECK(out["combination"][1]["scalar"] == "-5/16");
    CHECK(out["W"]["coeffs"][4] == "-16422-11592*sqrt(2)");

    CHECK(run_cli({"extremal", "--ring", "nope", "--degree", "24"}).exit_code == 1);
    CHECK(run_cli({"extremal", "--degree", "24"}).exit_code == 1);
}

TEST_CASE("cli: conjecture") {
    CapturedRun r = run_cli({"--json", "conjecture", "--max-n", "6"});
    CHECK(r.exit_code == 0);
    json out = json::parse(r.out);
    CHECK(out["all_hold"] == true);
    CHECK(out["results"].size() == 5);
}

TEST_CASE("cli: catalog") {
    TempFile f("cli_catalog.json");
    CapturedRun list = run_cli({"catalog", "list"});
    CHECK(list.exit_code == 0);
    CHECK(list.out.find("phi8plus") != std::string::npos);

    CapturedRun show = run_cli({"--json", "catalog", "show", "W12"});
    CHECK(show.exit_code == 0);
    json sj = json::parse(show.out);
    CHECK(sj["coeffs"][4] == "-33");

    // add a discovered entry, then show it from the user catalog
    TempFile entry_file("entry.json");
    std::ofstream(entry_file.path) << entry_to_json(
        make_entry("mydiscovery", phi4(), ExactNumber(2), "discovered"));
    CapturedRun add =
        run_cli({"catalog", "add", "--file", f.path, "--entry-json", entry_file.path});
    CHECK(add.exit_code == 0);
    CapturedRun show2 = run_cli({"--json", "catalog", "show", "mydiscovery", "--file", f.path});
    CHECK(show2.exit_code == 0);
    CHECK(json::parse(show2.out)["source"] == "discovered");

    CHECK(run_cli({"catalog", "show", "nope"}).exit_code == 1);
    CHECK(run_cli({"catalog", "frobnicate"}).exit_code == 1);
}

TEST_CASE("cli: usage errors") {
    CHECK(run_cli({}).exit_code == 1);
    CHECK(run_cli({"bogus-subcommand"}).exit_code == 1);
    CHECK(run_cli({"search", "--degree", "8"}).exit_code == 1);  // missing parity
}
