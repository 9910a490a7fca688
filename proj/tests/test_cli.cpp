#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "tcc/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result tcc_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = tcc::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(TCC_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("spectrum") {
    auto r = tcc_run({"spectrum", "--n", "2", "--p", "3", "--x", "1", "--y", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("{0:1, 1:1}") != std::string::npos);
    CHECK(r.out.find("diagonalizable over GF(p)") != std::string::npos);

    r = tcc_run({"spectrum", "--n", "3", "--p", "3", "--x", "1", "--y", "1", "--json"});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["spectrum"] == json::parse(R"([{"eigenvalue":1,"multiplicity":2}])"));
    CHECK(j["diagonalizable"] == false);

    CHECK(tcc_run({"spectrum", "--n", "1", "--p", "3", "--x", "1", "--y", "1"}).code == 1);
    CHECK(tcc_run({"spectrum", "--n", "2", "--p", "4", "--x", "1", "--y", "1"}).code == 1);
    CHECK(tcc_run({"spectrum", "--n", "2", "--p", "3", "--x", "3", "--y", "1"}).code == 1);
    CHECK(tcc_run({"bogus"}).code == 1);
    CHECK(tcc_run({}).code == 1);
}

TEST_CASE("build") {
    auto r = tcc_run({"build", "--n", "2", "--p", "3", "--x", "1", "--y", "1", "--a", "2", "--json"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["dimension"] == 1);
    CHECK(j["length"] == 4);
    CHECK(j["generator"] == json::parse("[[1,1,1,1]]"));
    CHECK_FALSE(j.contains("min_distance"));

    r = tcc_run({"build", "--n", "2", "--p", "3", "--x", "1", "--y", "1", "--a", "1", "--json"});
    CHECK(json::parse(r.out)["dimension"].get<int>() >= 2);

    r = tcc_run({"build", "--matrix-file", data("comb_n2_p3.txt"), "--a", "2", "--json"});
    REQUIRE(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["dimension"] == 1);
    CHECK_FALSE(j.contains("x"));

    r = tcc_run({"build", "--matrix-file", data("out_of_range.txt"), "--a", "2"});
    CHECK(r.code == 1);
    CHECK(r.err.find("line 3, column 3") != std::string::npos);
    CHECK(tcc_run({"build", "--matrix-file", data("missing.txt"), "--a", "2"}).code == 1);
    CHECK(tcc_run({"build", "--n", "2", "--p", "3", "--x", "1", "--y", "1"}).code == 1);  // --a required
}

TEST_CASE("analyze") {
    auto r = tcc_run({"analyze", "--n", "3", "--p", "7", "--x", "2", "--y", "1", "--a", "3", "--json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["length"] == 9);
    CHECK(j["dimension"] == 1);
    CHECK(j["min_distance"] == 9);
    CHECK(j["mds"] == true);
    CHECK(j["detect"] == 8);
    CHECK(j["correct"] == 4);
    CHECK(j["rate"] == "1/9");

    r = tcc_run({"analyze", "--n", "2", "--p", "3", "--x", "1", "--y", "1", "--a", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[4, 1, 4]") != std::string::npos);
    CHECK(r.out.find("1/4") != std::string::npos);

    r = tcc_run({"analyze", "--matrix-file", data("zero_n2_p2.txt"), "--a", "1", "--json"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["min_distance"] == 1);
    CHECK(json::parse(r.out)["dimension"] == 4);

    // x = 0, y = 1, a = 0 gives AB = 0 with A = I, so only B = 0.
    r = tcc_run({"analyze", "--n", "2", "--p", "3", "--x", "0", "--y", "1", "--a", "0"});
    CHECK(r.code == 2);
    CHECK(r.err.find("zero code") != std::string::npos);

    // A = 0 with n = 4 over GF(13): 13^16 codewords.
    CHECK(tcc_run({"analyze", "--n", "4", "--p", "13", "--x", "0", "--y", "0", "--a", "1"}).code == 3);
}

TEST_CASE("verify") {
    auto r = tcc_run({"verify", "--p-max", "5", "--n-max", "3", "--json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["summary"]["mismatching"] == 0);
    CHECK(j["summary"]["hypothesis_rows"].get<int>() > 0);
    for (const auto& row : j["rows"]) {
        if (row["hypotheses_met"] == true) CHECK(row["matches_theorem"] == true);
        else CHECK_FALSE(row.contains("matches_theorem"));
        if (row["a"] == 1) CHECK(row["dim"].get<int>() >= 2);
    }
    CHECK(tcc_run({"verify", "--p-max", "17"}).code == 1);
    CHECK(tcc_run({"verify", "--n-max", "7"}).code == 1);

    r = tcc_run({"verify", "--p-max", "3", "--n-max", "2", "--quiet"});
    CHECK(r.code == 0);
    CHECK(r.out.find("match the theorem") != std::string::npos);
}

TEST_CASE("simulate") {
    auto r = tcc_run({"simulate", "--n", "3", "--p", "5", "--x", "3", "--y", "1", "--a", "2", "--t", "4", "--exhaustive"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);

    r = tcc_run({"simulate", "--n", "3", "--p", "5", "--x", "3", "--y", "1", "--a", "2", "--t", "0", "--json"});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["stats"]["successes"] == j["stats"]["trials"]);

    r = tcc_run({"simulate", "--n", "3", "--p", "5", "--x", "3", "--y", "1", "--a", "2", "--t", "9"});
    CHECK(r.code == 2);
    CHECK(r.out.find("FAIL") != std::string::npos);
    CHECK(r.out.find("exceeds correction capacity 4") != std::string::npos);

    r = tcc_run({"simulate", "--n", "3", "--p", "5", "--x", "1", "--y", "1", "--a", "2", "--t", "1"});
    CHECK(r.err.find("warning") != std::string::npos);

    const std::vector<std::string> args{"simulate", "--n", "3", "--p", "5", "--x", "3", "--y", "1",
                                        "--a", "2", "--t", "6", "--seed", "77", "--json"};
    CHECK(tcc_run(args).out == tcc_run(args).out);
    CHECK(tcc_run({"simulate", "--n", "3", "--p", "5", "--x", "3", "--y", "1", "--a", "2", "--t", "10"}).code == 1);
}
