#include <doctest.h>

#include <fstream>

#include "totlab/io.hpp"

using namespace totlab;

namespace {

nlohmann::json load_schema(const char* name) {
    std::ifstream in(std::string(TOTLAB_SCHEMA_DIR) + "/" + name);
    REQUIRE(in.good());
    nlohmann::json schema;
    in >> schema;
    return schema;
}

}  // namespace

TEST_CASE("pgood serialization") {
    pgood::PGoodReport r;
    r.n = 289;
    r.p = Nat(7);
    r.good = false;
    r.witness = Nat(121);
    CHECK(io::pgood_line(r) == "pgood n=289 p=7 good=false witness=121");

    auto j = io::pgood_json(r);
    CHECK(j["n"] == "289");
    CHECK(j["witness"] == "121");
    std::string err;
    CHECK(io::validate_schema(load_schema("pgood_report.schema.json"), j, err));

    pgood::PGoodReport classic;
    classic.n = 30;
    classic.good = true;
    CHECK(io::pgood_line(classic) == "pgood n=30 p=none good=true witness=none");
    auto jc = io::pgood_json(classic);
    CHECK(jc["p"].is_null());
    CHECK(io::validate_schema(load_schema("pgood_report.schema.json"), jc, err));
}

TEST_CASE("scan serialization") {
    auto report = ineq::scan(ineq::Which::a19, 100, 1);
    auto j = io::scan_json(report);
    std::string err;
    CHECK(io::validate_schema(load_schema("scan_report.schema.json"), j, err));

    std::string csv = io::scan_csv(report);
    CHECK(csv.rfind("kind,which,i1,i2,i3,lhs,rhs\n", 0) == 0);
    CHECK(csv.find("summary,a19,") != std::string::npos);

    // a fabricated failure renders one row per failure
    ineq::ScanReport fake{ineq::Which::eq4, 100, 5, {}};
    fake.failures.push_back(ineq::Failure{{Nat(19)}, Nat(529), Nat(400)});
    std::string fcsv = io::scan_csv(fake);
    CHECK(fcsv.find("failure,eq4,19,,,529,400") != std::string::npos);
    auto fj = io::scan_json(fake);
    CHECK(io::validate_schema(load_schema("scan_report.schema.json"), fj, err));
}

TEST_CASE("structure report serialization") {
    folio::NatStructure nat;
    folio::CheckOptions<Nat> opts;
    opts.samples = 50;
    auto report = folio::check_structure(nat, {"A1", "A9", "A13"}, opts);
    auto j = io::structure_report_json(report);
    std::string err;
    CHECK(io::validate_schema(load_schema("structure_report.schema.json"), j, err));
    CHECK(j["axioms"].size() == 3);

    SUBCASE("determinism: identical inputs give identical bytes") {
        auto again = folio::check_structure(nat, {"A1", "A9", "A13"}, opts);
        CHECK(io::structure_report_json(again).dump() == j.dump());
    }
}

TEST_CASE("schema validator rejects shape violations") {
    auto schema = load_schema("pgood_report.schema.json");
    std::string err;
    nlohmann::json bad1 = {{"n", "12"}, {"p", nullptr}, {"good", true}};  // missing witness
    CHECK_FALSE(io::validate_schema(schema, bad1, err));
    CHECK(err.find("witness") != std::string::npos);

    nlohmann::json bad2 = {{"n", 12}, {"p", nullptr}, {"good", true}, {"witness", nullptr}};  // n not a string
    CHECK_FALSE(io::validate_schema(schema, bad2, err));

    nlohmann::json bad3 = {{"n", "x2"}, {"p", nullptr}, {"good", true}, {"witness", nullptr}};  // pattern
    CHECK_FALSE(io::validate_schema(schema, bad3, err));

    nlohmann::json bad4 = {{"n", "2"}, {"p", nullptr}, {"good", true}, {"witness", nullptr}, {"extra", 1}};
    CHECK_FALSE(io::validate_schema(schema, bad4, err));
}
