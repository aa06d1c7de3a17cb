#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "absorder/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "absorder");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = absorder::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("order subcommand", "[cli]") {
    auto r = run({"order", "(1 2)(3 4)", "(1 2 3 4)"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("true\n", 0) == 0);
    r = run({"order", "(1 3)(2 4)", "(1 2 3 4)"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("false\n", 0) == 0);
    r = run({"order", "(1 2", "(1 2 3)"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    r = run({"order", "2 1 3", "(1 2 3)", "--method", "length"});
    CHECK(r.code == 0);
    CHECK(r.out == "true\n");
    // one-line notation fixes the degree
    CHECK(run({"order", "2 1", "(1 2 3)"}).code == 2);
    r = run({"order", "(1 2)", "(1 2 3)", "--n", "2"});
    CHECK(r.code == 2);
    r = run({"order", "(1 2)", "(1 2 3)", "--method", "magic"});
    CHECK(r.code == 2);
}

TEST_CASE("table1 subcommand", "[cli]") {
    auto r = run({"table1", "--max", "9", "--method", "both"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "1         1\n"
          "2         0\n"
          "3         2\n"
          "4        16\n"
          "5       192\n"
          "6      3008\n"
          "7     58480\n"
          "8   1360896\n"
          "9  36931328\n");
    r = run({"table1", "--max", "2"});
    CHECK(r.out == "1  1\n2  0\n");
    r = run({"table1", "--max", "20", "--method", "gf", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 20);
    CHECK(j[8]["value"] == "36931328");
    CHECK(run({"table1", "--max", "0"}).code == 2);
    CHECK(run({"table1", "--bogus"}).code == 2);
}

TEST_CASE("hasse subcommand", "[cli]") {
    auto r = run({"hasse", "4", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["elements"].size() == 24);
    std::vector<int> layers(4, 0);
    for (int rank : j["ranks"]) ++layers[static_cast<std::size_t>(rank)];
    CHECK(layers == std::vector<int>{1, 6, 11, 6});
    r = run({"hasse", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("n0 -> n1;") != std::string::npos);
    CHECK(run({"hasse", "3"}).out == run({"hasse", "3"}).out);
    CHECK(run({"hasse", "10"}).code == 2);
    const auto path = std::filesystem::temp_directory_path() / "absorder_hasse_test.dot";
    r = run({"hasse", "3", "--output", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(path) == run({"hasse", "3"}).out);
    std::filesystem::remove(path);
}

TEST_CASE("homology subcommand", "[cli]") {
    auto r = run({"homology", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("H~_2 = Z^16") != std::string::npos);
    CHECK(r.out.find("H~_1 = 0") != std::string::npos);
    r = run({"homology", "3", "--cm"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Cohen-Macaulay over Z: true") != std::string::npos);
    r = run({"homology", "4", "--format", "json", "--cm", "--links"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["homology"].back()["rank"] == 16);
    CHECK(j["cm"]["cohen_macaulay"] == true);
    CHECK(run({"homology", "6"}).code == 2);

    const auto path = std::filesystem::temp_directory_path() / "absorder_facets_test.txt";
    CHECK(run({"homology", "3", "--facets-out", path.string()}).code == 0);
    r = run({"homology", "--facets-in", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("H~_1 = Z^2") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("certify subcommand", "[cli]") {
    auto r = run({"certify", "4", "--sigma", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAILED 0") != std::string::npos);
    r = run({"certify", "5", "--sigma", "1", "2", "--tau", "{3,4}"});
    CHECK(r.code == 0);
    CHECK(r.out.find("tau1={3,4}") != std::string::npos);
    // an unquoted {3,4} reaches us brace-expanded as two words
    CHECK(run({"certify", "5", "--sigma", "1", "2", "--tau", "3", "4"}).out == r.out);
    r = run({"certify", "5", "--sigma", "1", "--tau", "2", "--tau", "3,4", "--tau0", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("tau0={5} tau1={2} tau2={3,4}") != std::string::npos);
    r = run({"certify", "8", "--sigma", "1"});
    CHECK(r.code == 3);
    CHECK(r.err.find("cap") != std::string::npos);
    CHECK(run({"certify", "4", "--sigma", "1", "1"}).code == 2);
    CHECK(run({"certify", "4"}).code == 2);

    const auto path = std::filesystem::temp_directory_path() / "absorder_cert_test.json";
    CHECK(run({"certify", "4", "--sigma", "1", "--json", path.string()}).code == 0);
    const auto j = nlohmann::json::parse(slurp(path));
    CHECK(j["kind"] == "UNION");
    CHECK(j["status"] == "VERIFIED");
    std::filesystem::remove(path);
}

TEST_CASE("usage errors", "[cli]") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
