#include "doctest.h"

#include "json.hpp"
#include "sea/cli.hpp"

using sea::cli::execute;
using nlohmann::json;

TEST_CASE("transvect") {
    const auto r = execute({"transvect", "--f", "1,0,1", "--g", "1,0,1", "-r", "2"});
    REQUIRE(r.exit_code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["degree"] == 0);
    CHECK(doc["coeffs"][0] == "2");
}

TEST_CASE("invariants fixtures") {
    auto j2 = [](const std::string& kind, const std::string& coeffs, const char* name) {
        const auto r = execute({"invariants", "--kind", kind, "--coeffs", coeffs});
        REQUIRE(r.exit_code == 0);
        return json::parse(r.out)["invariants"][name].get<std::string>();
    };
    CHECK(j2("sextic", "1,0,0,0,0,0,1", "J2") == "2");
    CHECK(j2("sextic", "-1,0,0,0,0,0,1", "J2") == "-2");
    CHECK(j2("octavic", "x^8+1", "J2") == "280");
    CHECK(j2("decimic", "x^10+1", "J2") == "2");
    CHECK(j2("general", "x^12+1", "I2") == "2");
}

TEST_CASE("genus") {
    const auto r = execute({"genus", "-n", "2", "--poly", "x^11+1"});
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["genus"] == 5);
    CHECK(execute({"genus", "-n", "2", "--poly", "x^2+2*x+1"}).exit_code == 2);
}

TEST_CASE("isomorphic exit codes") {
    const std::string f = "3,-1,2,5,0,-7,1";
    auto same = execute({"isomorphic", "--genus", "2", "--f1", f, "--f2", f});
    CHECK(same.exit_code == 0);
    CHECK(json::parse(same.out)["isomorphic"] == true);
    auto diff = execute({"isomorphic", "--genus", "2", "--f1", f, "--f2", "3,-1,2,5,0,-7,2"});
    CHECK(diff.exit_code == 1);
    CHECK(json::parse(diff.out)["isomorphic"] == false);
    auto inconclusive = execute({"isomorphic", "--genus", "2", "--f1", "x^6-1", "--f2", f});
    CHECK(inconclusive.exit_code == 2);
    CHECK(inconclusive.out.empty());
    CHECK_FALSE(inconclusive.err.empty());
}

TEST_CASE("catalog subcommands") {
    const auto list = execute({"catalog", "list", "--genus", "5", "--json"});
    REQUIRE(list.exit_code == 0);
    CHECK(json::parse(list.out).size() == 20);

    const auto verify = execute({"catalog", "verify"});
    CHECK(verify.exit_code == 0);
    CHECK(json::parse(verify.out)["ok"] == true);

    const auto spec = execute({"catalog", "specialize", "--id", "g5-c4-8", "--params", "a1=1,a2=3,a3=5"});
    CHECK(spec.exit_code == 0);
    CHECK(json::parse(spec.out)["genus"] == 5);
    CHECK(execute({"catalog", "specialize", "--id", "g5-c4-8", "--params", "a1=2,a2=3,a3=5"}).exit_code == 2);
    CHECK(execute({"catalog", "specialize", "--id", "nope", "--params", ""}).exit_code == 2);

    const auto inc = execute({"catalog", "inclusions", "--genus", "5"});
    CHECK(inc.exit_code == 0);
    CHECK(json::parse(inc.out)["nodes"].size() == 20);
}

TEST_CASE("usage errors") {
    CHECK(execute({}).exit_code == 2);
    CHECK(execute({"frobnicate"}).exit_code == 2);
    CHECK(execute({"transvect", "--f", "1,2", "--g", "1,0,1", "-r", "5"}).exit_code == 2);
    CHECK(execute({"invariants", "--kind", "sextic", "--coeffs", "1,0,1"}).exit_code == 2);
    const auto bad = execute({"invariants", "--kind", "septic", "--coeffs", "1,0,1"});
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.empty());
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"invariants", "--kind", "octavic", "--coeffs", "1,2,-3,0,5,1,0,4,7"};
    CHECK(execute(args).out == execute(args).out);
    CHECK(execute({"catalog", "export", "--format", "csv"}).out ==
          execute({"catalog", "export", "--format", "csv"}).out);
}
