#include <random>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "tcc/io.hpp"
#include "tcc/report.hpp"

using namespace tcc;
using nlohmann::json;

namespace {

Matrix parse(const std::string& text) {
    std::istringstream in(text);
    return read_matrix(in);
}

template <class T>
T round_trip(const T& value) {
    return json::parse(json(value).dump()).get<T>();
}

}  // namespace

TEST_CASE("matrix text format") {
    const auto m = parse("5 2 3\n0 1 2\n3 4 0\n");
    CHECK(m == Matrix(Prime(5), {{0, 1, 2}, {3, 4, 0}}));

    std::ostringstream out;
    write_matrix(out, m);
    CHECK(out.str() == "5 2 3\n0 1 2\n3 4 0\n");
    CHECK(parse(out.str()) == m);
}

TEST_CASE("matrix parse errors name line and column") {
    auto fails_at = [](const std::string& text, std::size_t line, std::size_t column) {
        try {
            (void)parse(text);
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
            CHECK(e.column() == column);
            return;
        }
        FAIL("expected a parse error");
    };
    fails_at("", 1, 1);
    fails_at("4 2 2\n1 0\n0 1\n", 1, 1);       // not prime
    fails_at("3 2 2\n1 0\n0 3\n", 3, 3);       // out of range, not reduced
    fails_at("3 2 2\n1 0\n", 3, 1);            // missing row
    fails_at("3 2 2\n1 0 1\n0 1\n", 2, 5);     // too many entries
    fails_at("3 2 2\n1 x\n0 1\n", 2, 3);       // junk
    fails_at("3 2 2\n1 0\n0 1\n7\n", 4, 1);    // trailing data
    fails_at("3 0 2\n", 1, 3);
    CHECK_THROWS_AS(read_matrix_file("/nonexistent/matrix.txt"), Error);
}

TEST_CASE("random matrices survive write/read") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 100; ++i) {
        const Prime p(i % 2 ? 7 : 2);
        const auto m = testing::random_matrix(rng, p, 1 + i % 4, 1 + (i / 4) % 5);
        std::ostringstream out;
        write_matrix(out, m);
        CHECK(parse(out.str()) == m);
    }
}

TEST_CASE("code summary json schema") {
    CodeSummary s;
    s.p = 3;
    s.n = 2;
    s.x = 1;
    s.y = 1;
    s.a = 2;
    s.length = 4;
    s.dimension = 1;
    s.generator = {{1, 1, 1, 1}};
    const json bare = s;
    CHECK_FALSE(bare.contains("min_distance"));
    CHECK_FALSE(bare.contains("rate"));
    CHECK(round_trip(s) == s);

    s.min_distance = 4;
    s.mds = true;
    s.detect = 3;
    s.correct = 1;
    s.rate = Rate{1, 4};
    const json full = s;
    for (const char* key : {"p", "n", "x", "y", "a", "length", "dimension", "min_distance", "mds", "detect", "correct", "rate"})
        CHECK(full.contains(key));
    CHECK(full["rate"] == "1/4");
    CHECK(round_trip(s) == s);

    s.x.reset();
    s.y.reset();
    CHECK_FALSE(json(s).contains("x"));
    CHECK(round_trip(s) == s);
}

TEST_CASE("other reports round-trip") {
    SpectrumSummary sp{3, 2, 1, 1, {{0, 1}, {1, 1}}, std::vector<std::pair<std::uint32_t, std::size_t>>{{0, 1}, {1, 1}}, true};
    CHECK(round_trip(sp) == sp);
    sp.scan.reset();
    CHECK(round_trip(sp) == sp);

    SimulationSummary sim;
    sim.p = 5;
    sim.n = 3;
    sim.x = 3;
    sim.y = 1;
    sim.a = 2;
    sim.length = 9;
    sim.dimension = 1;
    sim.t = 4;
    sim.mode = "monte_carlo";
    sim.seed = 123456789012345ULL;
    sim.stats = ChannelStats{1000, 998, 1, 1};
    sim.capacity = 4;
    CHECK(round_trip(sim) == sim);
    sim.stats.reset();
    sim.correction_ok = true;
    sim.detection_ok = false;
    CHECK(round_trip(sim) == sim);

    VerifyRow row{7, 3, 2, 1, 3, true, 1, 9, true, true, ""};
    CHECK(round_trip(row) == row);
    VerifyRow outside{7, 3, 2, 0, 3, false, 2, std::nullopt, std::nullopt, std::nullopt, "outside theorem: y = 0"};
    CHECK(round_trip(outside) == outside);
    CHECK_FALSE(json(outside).contains("matches_theorem"));

    CHECK(round_trip(ChannelStats{3, 1, 1, 1}) == ChannelStats{3, 1, 1, 1});
    CHECK_THROWS(json("14").get<Rate>());
}
