#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "ballotlab/identities.hpp"
#include "ballotlab/oeis.hpp"

using namespace ballotlab;

namespace {

std::string data_path(const std::string& name) {
    return std::string(BALLOTLAB_TEST_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_SUITE_BEGIN("verify");

TEST_CASE("registry covers the identity suite") {
    std::set<std::string> names;
    for (const auto& check : identity_registry()) names.insert(check.name);
    for (const char* expected :
         {"bdn", "spiro", "e17", "e21", "relpkdes", "relpkdesmh", "zhuang", "formdespk", "gfbpk",
          "fomofbxt", "gfdep", "recofpnd", "ode", "multinomial", "eulerian-catalan", "deslaw",
          "phi-roundtrip", "rem1"})
        CHECK(names.count(expected) == 1);
    CHECK_THROWS_AS(run_identity("no-such-identity"), std::invalid_argument);
}

TEST_CASE("identity spot checks at reduced scale") {
    for (const char* name : {"bdn", "spiro", "relpkdes", "formdespk", "gfbpk", "fomofbxt", "gfdep",
                             "recofpnd", "multinomial", "eulerian-catalan"}) {
        for (const auto& rep : run_identity(name, 5)) {
            INFO(name);
            CHECK(rep.pass);
        }
    }
    for (const auto& rep : run_identity("zhuang", 3)) CHECK(rep.pass);
    for (const auto& rep : run_identity("e17", 4)) CHECK(rep.pass);
    for (const auto& rep : run_identity("e21", 4)) CHECK(rep.pass);
    for (const auto& rep : run_identity("relpkdesmh", 4)) CHECK(rep.pass);
    for (const auto& rep : run_identity("deslaw", 5)) CHECK(rep.pass);
    for (const auto& rep : run_identity("phi-roundtrip", 5)) CHECK(rep.pass);
    for (const auto& rep : run_identity("rem1", 5)) CHECK(rep.pass);
    for (const auto& rep : run_identity("ode", 6)) CHECK(rep.pass);
}

TEST_CASE("eulerian-catalan keeps its arithmetic side past the enumeration limit") {
    for (const auto& rep : run_identity("eulerian-catalan", 13)) CHECK(rep.pass);
}

TEST_CASE("report json shape") {
    auto reports = run_identity("e17", 2);
    REQUIRE(reports.size() == 3);
    auto j = reports[2].to_json();
    CHECK(j["identity"] == "e17");
    CHECK(j["status"] == "pass");
    CHECK(j["parameters"]["n"] == 2);
    CHECK(j.contains("elapsed_ms"));
    CHECK_FALSE(j.contains("counterexample"));
}

TEST_CASE("series comparison reports the first mismatch") {
    TruncationBox box(2, 0, 0, 0, 0);
    Series a = Series::one(box);
    Series b = Series::one(box) + Series::var(box, Var::X);
    VerificationReport rep;
    rep.identity = "demo";
    CHECK_FALSE(compare_series(rep, a, b));
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.counterexample.has_value());
    CHECK((*rep.counterexample)["monomial"]["x"] == 1);
    CHECK((*rep.counterexample)["lhs"] == "0");
    CHECK((*rep.counterexample)["rhs"] == "1");
}

TEST_CASE("b-file parsing") {
    std::istringstream good("# comment\n0 1\n1 1\n2 1 # trailing\n\n3 3\n");
    OeisBFile f = parse_b_file(good, "A000246");
    CHECK(f.first_index == 0);
    REQUIRE(f.values.size() == 4);
    CHECK(f.values[3] == 3);

    std::istringstream gap("0 1\n2 1\n");
    CHECK_THROWS_AS(parse_b_file(gap, "X"), std::runtime_error);
    std::istringstream missing("0\n");
    CHECK_THROWS_AS(parse_b_file(missing, "X"), std::runtime_error);
    std::istringstream junk("zero 1\n");
    CHECK_THROWS_AS(parse_b_file(junk, "X"), std::runtime_error);
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(parse_b_file(empty, "X"), std::runtime_error);
    CHECK_THROWS_AS(load_b_file(data_path("nope.txt"), "A000246"), std::runtime_error);
}

TEST_CASE("OEIS cross-checks against the shipped b-files") {
    for (const auto& id : known_oeis_sequences()) {
        std::string file = "b" + id.substr(1) + ".txt";
        VerificationReport rep = oeis_check(load_b_file(data_path(file), id));
        INFO(id);
        CHECK(rep.pass);
        CHECK(rep.parameters["terms_checked"].get<size_t>() >= 15);
    }
}

TEST_CASE("OEIS mismatch and offset handling") {
    std::istringstream doctored("0 1\n1 1\n2 1\n3 3\n4 9\n5 46\n");
    VerificationReport rep = oeis_check(parse_b_file(doctored, "A000246"));
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.counterexample.has_value());
    CHECK((*rep.counterexample)["index"] == 5);
    CHECK((*rep.counterexample)["computed"] == "45");
    CHECK((*rep.counterexample)["b_file"] == "46");

    std::istringstream shifted("1 1\n2 1\n3 3\n");
    CHECK_THROWS_AS(oeis_check(parse_b_file(shifted, "A000246")), std::runtime_error);
    std::istringstream unknown("0 1\n");
    CHECK_THROWS_AS(oeis_check(parse_b_file(unknown, "A999999")), std::runtime_error);
}

TEST_SUITE_END();
