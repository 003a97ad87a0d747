#include <doctest.h>

#include <fstream>
#include <string>

#include <json.hpp>

#include "cli_runner.hpp"

namespace {

inline cli::RunResult run_cli(const std::string& args) { return cli::run(args); }

using Json = nlohmann::json;

}  // namespace

TEST_CASE("check-p reproduces the failing certificate with exit code 1")
{
    const auto res = run_cli("check-p --family A --rank 2 --word 1,2,1 --mult 0,1,1");
    CHECK(res.exit_code == 1);
    const Json report = Json::parse(res.out);
    CHECK_FALSE(report["checks"]["conditionP"]["pass"].get<bool>());
    const Json witness = report["checks"]["conditionP"]["witness"];
    CHECK(witness["k"] == 1);
    CHECK(witness["x"] == Json::array({0, 1}));
    CHECK(witness["value"] == -1);
    CHECK(witness["text"] == "k=1 x=(0,1) A_1=-1");
}

TEST_CASE("check-p passes with exit code 0")
{
    const auto res = run_cli("check-p --family A --rank 2 --word 1,2,1 --mult 1,1,1");
    CHECK(res.exit_code == 0);
    const Json report = Json::parse(res.out);
    CHECK(report["checks"]["conditionP"]["pass"].get<bool>());
}

TEST_CASE("check-p cross-checks against the direct scan when asked")
{
    const auto res = run_cli(
        "check-p --family A --rank 2 --word 1,2,1 --mult 1,1,1 --oracle --denominator 2");
    CHECK(res.exit_code == 0);
    const Json report = Json::parse(res.out);
    CHECK(report["checks"]["oracle_agrees"]["pass"].get<bool>());
}

TEST_CASE("resolve constructs the multiplicity list and passes")
{
    const auto res = run_cli("resolve --family A --rank 2 --word 1,2,1 --weight 1,1");
    CHECK(res.exit_code == 0);
    const Json report = Json::parse(res.out);
    CHECK(report["m"] == Json::array({2, 1, 1}));
    CHECK(report["all_pass"].get<bool>());
    for (const auto& [name, check] : report["checks"].items())
        CHECK(check["pass"].get<bool>());
}

TEST_CASE("m-of-lambda fixture")
{
    const auto res = run_cli("m-of-lambda --family A --rank 2 --word 1,2,1 --weight 1,1");
    CHECK(res.exit_code == 0);
    const Json report = Json::parse(res.out);
    CHECK(report["m"] == Json::array({0, 1, 1}));
}

TEST_CASE("twisted-cube report carries vertices and verdicts")
{
    const auto res = run_cli("twisted-cube --family A --rank 2 --word 1,2,1 --mult 0,1,1");
    CHECK(res.exit_code == 0);
    const Json report = Json::parse(res.out);
    CHECK_FALSE(report["checks"]["lattice"]["pass"].get<bool>());
    bool found_half = false;
    for (const auto& v : report["vertices"])
        if (v == Json::array({"0", "0", "1/2"}))
            found_half = true;
    CHECK(found_half);
    CHECK(report["lattice_counts"]["1"] == 8);
    CHECK(report["lattice_counts"]["2"] == 28);
}

TEST_CASE("identical inputs give byte-identical reports")
{
    const std::string args = "resolve --family A --rank 2 --word 1,2,1 --weight 1,1";
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    CHECK(first.out == second.out);
}

TEST_CASE("spec files load and flags override them")
{
    const std::string path = "/tmp/stringcubes_spec_test.json";
    {
        std::ofstream spec(path);
        spec << R"({"family":"A","rank":2,"word":[1,2,1],"mult":[0,1,1]})";
    }
    const auto from_file = run_cli("check-p --spec " + path);
    CHECK(from_file.exit_code == 1);

    const auto overridden = run_cli("check-p --spec " + path + " --mult 1,1,1");
    CHECK(overridden.exit_code == 0);
    const Json report = Json::parse(overridden.out);
    CHECK(report["input"]["mult"] == Json::array({1, 1, 1}));
}

TEST_CASE("string-polytope counts and membership queries")
{
    const auto res = run_cli(
        "string-polytope --family A --rank 2 --word 1,2,1 --mult 0,1,1 --point 0,0,1/2");
    CHECK(res.exit_code == 0);
    const Json report = Json::parse(res.out);
    CHECK(report["lattice_counts"]["1"] == 8);
    CHECK(report["lattice_counts"]["2"] == 27);
    CHECK_FALSE(report["membership"]["inside"].get<bool>());
}

TEST_CASE("compare certifies containment both ways")
{
    const auto good = run_cli(
        "compare --family A --rank 2 --word 1,2,1 --weight 1,1 --mult 2,1,1");
    CHECK(good.exit_code == 0);

    const auto bad = run_cli(
        "compare --family A --rank 2 --word 1,2,1 --mult 2,1,1 --mult2 0,1,1 --dilates 2");
    CHECK(bad.exit_code == 1);
    const Json report = Json::parse(bad.out);
    CHECK(report["containment"]["dilates"][1]["missing"].get<int>() > 0);
}

TEST_CASE("export produces OFF in dimension 3")
{
    const auto res = run_cli(
        "export --family A --rank 2 --word 1,2,1 --mult 2,1,1 --format off");
    CHECK(res.exit_code == 0);
    CHECK(res.out.rfind("OFF\n", 0) == 0);
}

TEST_CASE("input and resource errors map to exit codes 2 and 3")
{
    CHECK(run_cli("check-p --family Z --rank 2 --word 1,2,1 --mult 0,1,1").exit_code == 2);
    CHECK(run_cli("check-p --family A --rank 2 --word 1,9,1 --mult 0,1,1").exit_code == 2);
    CHECK(run_cli("resolve --family A --rank 2 --word 1,2,1").exit_code == 2);
    CHECK(run_cli("twisted-cube --family A --rank 2 --word 1,2,1 --mult 3,3,3 --cap 4")
              .exit_code == 3);
}

TEST_CASE("cartier table output")
{
    const auto res = run_cli("cartier --family A --rank 2 --word 1,2,1 --mult 0,1,1");
    CHECK(res.exit_code == 0);
    const Json report = Json::parse(res.out);
    CHECK(report["cartier"]["-+-"] == Json::array({-1, 0, 1}));
    CHECK(report["cartier"]["---"] == Json::array({1, 2, 1}));
    CHECK(report["cartier"]["+++"] == Json::array({0, 0, 0}));
}
