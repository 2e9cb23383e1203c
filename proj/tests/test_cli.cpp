#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "asep/cli.hpp"
#include "asep/json_io.hpp"
#include "asep/models.hpp"

using namespace asep;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return RunResult{code, out.str(), err.str()};
}

} // namespace

TEST_CASE("solve prints the two-site measure as canonical JSON") {
    RunResult r = run({"solve", "--model", "open3", "--n", "2"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["BB"] == "alpha^2");
    CHECK(j["BO"] == "alpha^2*beta + alpha*beta^2 + alpha*beta*q");
    CHECK(j["OB"] == "alpha*beta");
    CHECK(j["OO"] == "beta^2");
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"BB", "BO", "OB", "OO"});
}

TEST_CASE("identical invocations are byte-identical") {
    std::vector<std::string> args{"solve", "--model", "masep", "--lambda", "4,3,2,1"};
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    RunResult c = run({"tableaux", "--n", "3", "--mode", "ab", "--weights", "--gf"});
    RunResult d = run({"tableaux", "--n", "3", "--mode", "ab", "--weights", "--gf"});
    CHECK(c.code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("solve with an evaluation point") {
    RunResult r = run({"solve", "--model", "open3", "--n", "2", "--at", "1,1,1"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["BB"] == "1");
    CHECK(j["BO"] == "3");
    RunResult bad = run({"solve", "--model", "open3", "--n", "2", "--at", "1,1"});
    CHECK(bad.code == 2);
}

TEST_CASE("solve text format") {
    RunResult r = run({"solve", "--model", "masep", "--lambda", "1,0", "--format", "text"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "01\t1\n10\t1\n");
}

TEST_CASE("tableaux counts and generating function") {
    RunResult r = run({"tableaux", "--n", "2", "--mode", "ab", "--gf"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["count"] == 6);
    CHECK(j["generating_function"] ==
          "alpha^2 + alpha^2*beta + alpha*beta^2 + alpha*beta*q + alpha*beta + beta^2");
    RunResult f = run({"tableaux", "--n", "2", "--mode", "abgd", "--type", "BO"});
    Json jf = Json::parse(f.out);
    CHECK(jf["count"] == 8);
}

TEST_CASE("ansatz subcommand") {
    RunResult r = run({"ansatz", "--state", "BO"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["psi"] == "alpha^2*beta + alpha*beta^2 + alpha*beta*q");
    RunResult rel = run({"ansatz", "--check-relations", "--dim", "5"});
    CHECK(rel.code == 0);
    Json jr = Json::parse(rel.out);
    CHECK(jr["relations_hold"] == true);
}

TEST_CASE("trees subcommand") {
    RunResult r = run({"trees", "--model", "demo5", "--root", "1"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["psi"] == "2*q^3 + q^2 + q + 2");

    RunResult m = run({"trees", "--model", "demo5"});
    Json jm = Json::parse(m.out);
    CHECK(jm["2"] == "q^4 + 3*q^3 + 4*q^2 + 3*q + 1");

    RunResult q2 = run({"trees", "--model", "open3", "--n", "2", "--ratio"});
    Json jq = Json::parse(q2.out);
    CHECK(jq["ratio"] == "1");

    RunResult q3 = run({"trees", "--model", "open3", "--n", "3", "--ratio", "--at", "1,1,1"});
    Json jq3 = Json::parse(q3.out);
    CHECK(jq3["ratio"] == "4");

    RunResult lst = run({"trees", "--model", "demo5", "--root", "1", "--list"});
    Json jl = Json::parse(lst.out);
    CHECK(jl["count"] == 6);
}

TEST_CASE("schubert subcommand") {
    RunResult r = run({"schubert", "--perm", "1432"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["schubert"] == "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3");
    RunResult t = run({"schubert", "--perm", "1243", "--format", "text"});
    CHECK(t.out == "x1 + x2 + x3\n");
}

TEST_CASE("verify-kw subcommand") {
    RunResult r = run({"verify-kw", "--n", "3"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["z_identity"] == true);
}

TEST_CASE("export round trip") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "asep_export_test";
    fs::create_directories(dir);
    RunResult r = run({"export", "--model", "open3", "--n", "3", "--out", dir.string()});
    REQUIRE(r.code == 0);

    std::ifstream cf(dir / "chain.json");
    Json cj = Json::parse(cf);
    ChainPtr chain = chain_from_json(cj);
    ChainPtr direct = build_open_asep3(3);
    CHECK(chain->states() == direct->states());
    CHECK(chain->rates() == direct->rates());
    CHECK(chain->ring()->names() == direct->ring()->names());

    std::ifstream mf(dir / "measure.json");
    Json mj = Json::parse(mf);
    Measure m = measure_from_json(mj);
    CHECK(m.values == stationary_compact(direct).values);
    fs::remove_all(dir);
}

TEST_CASE("export of the demo measure contains the reference polynomial") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "asep_export_demo5";
    fs::create_directories(dir);
    RunResult r = run({"trees", "--model", "demo5", "--out", (dir / "tree.json").string()});
    REQUIRE(r.code == 0);
    std::ifstream f(dir / "tree.json");
    std::stringstream body;
    body << f.rdbuf();
    CHECK(body.str().find("2*q^3 + q^2 + q + 2") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("verify subcommands pass on the fast tables") {
    for (int table : {1, 4, 5}) {
        CAPTURE(table);
        RunResult r = run({"verify", "--table", std::to_string(table)});
        CHECK(r.code == 0);
        CHECK(r.out.find("FAIL") == std::string::npos);
    }
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({"solve", "--model", "nosuch", "--n", "2"}).code == 2);
    CHECK(run({"solve"}).code == 2);
    CHECK(run({"nosuchcommand"}).code == 2);
    CHECK(run({"solve", "--model", "open3", "--n", "0"}).code == 2);
}
