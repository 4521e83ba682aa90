#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "ptinfo/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"ptinfo"};
    argv.insert(argv.end(), args);
    std::ostringstream out, err;
    const int code = ptinfo::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) v.push_back(line);
    return v;
}

std::vector<std::string> fields(const std::string& line) {
    std::vector<std::string> v;
    std::istringstream in(line);
    for (std::string f; std::getline(in, f, ',');) v.push_back(f);
    return v;
}

}  // namespace

TEST_CASE("state: csv header and one row") {
    const auto r = run({"state", "--lambda", "0.5"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(fields(ls[0]) == ptinfo::cli::state_columns());
    const auto row = fields(ls[1]);
    REQUIRE(row.size() == ptinfo::cli::state_columns().size());
    CHECK(row[0] == "0.5");
    CHECK(std::stod(row[7]) == doctest::Approx(0.551859).epsilon(1e-4));  // r2
}

TEST_CASE("state: json") {
    const auto r = run({"state", "--lambda", "2.5", "--format", "json", "--p2-mode", "derivative"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0]["lambda"].get<double>() == 2.5);
    CHECK(j[0]["squeezed"].get<bool>());
    CHECK(j[0]["bound"].get<double>() == 2.25);
}

TEST_CASE("output is byte-identical across runs") {
    const auto a = run({"sweep", "--n", "1", "--l", "1"});
    const auto b = run({"sweep", "--n", "1", "--l", "1"});
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"state", "--no-such-flag"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"table", "16"}).code == 2);
    CHECK(run({"state", "--format", "xml"}).code == 2);
}

TEST_CASE("inadmissible parameters are a computation failure") {
    const auto r = run({"state", "--lambda", "-1"});
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("unbound state is an error") {
    const auto r = run({"state", "--lambda", "1.5", "--n", "3"});
    CHECK(r.code != 0);
    CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("figure1 reproduces the closed-form ground-state point") {
    const auto r = run({"figure1"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("\n0,0,100,8.395639232\n") != std::string::npos);
    CHECK(lines(r.out)[0] == "n,l,lambda,r_inv2");
}

TEST_CASE("table 1 has one deviation row per printed cell") {
    const auto r = run({"table", "1"});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out).size() == 13);
}

TEST_CASE("sweep covers the default lambda grid") {
    const auto r = run({"sweep"});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out).size() == 11);
}

TEST_CASE("sweep skips unbound lambdas with a warning") {
    const auto r = run({"sweep", "--n", "2"});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out).size() < 11);
    CHECK(r.err.find("skipping") != std::string::npos);
}

TEST_CASE("validate reports the two misprinted cells and exits 1") {
    const auto r = run({"validate", "--identities-only"});
    CHECK(r.code == 1);
    CHECK(r.err.find("2 failed") != std::string::npos);
    CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("--output writes to a file") {
    const auto path = std::filesystem::temp_directory_path() / "ptinfo_cli_test.csv";
    const std::string s = path.string();
    const auto r = run({"state", "--output", s.c_str()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == run({"state"}).out);
    std::filesystem::remove(path);
}
