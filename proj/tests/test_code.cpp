#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tcc/code.hpp"
#include "tcc/comb.hpp"

using namespace tcc;

namespace {

LinearCode repetition(Prime p, std::size_t length) {
    const std::vector<Vector> rows{Vector(p, std::vector<std::uint32_t>(length, 1))};
    return LinearCode(p, length, rows);
}

LinearCode full_space(Prime p, std::size_t length) {
    std::vector<Vector> rows;
    const auto I = Matrix::identity(p, length);
    for (std::size_t i = 0; i < length; ++i) rows.push_back(I.row(i));
    return LinearCode(p, length, rows);
}

LinearCode comb_code(std::size_t n, std::uint32_t x, std::uint32_t y, std::uint32_t a, std::uint32_t pv) {
    const Prime p(pv);
    return code_from_basis(centralizer_code(TwistSpec(comb_matrix(CombParams(n, x, y, p)), Felt(a, p))));
}

}  // namespace

TEST_CASE("code_from_basis") {
    const auto c = comb_code(2, 1, 1, 2, 3);
    CHECK(c.length() == 4);
    CHECK(c.dimension() == 1);
    CHECK(c.generator()->row(0) == Vector(Prime(3), {1, 1, 1, 1}));

    const Prime p(3);
    const auto zero = code_from_basis(CentralizerBasis{TwistSpec(Matrix::identity(p, 2), Felt(0, p)), {}});
    CHECK(zero.dimension() == 0);
    CHECK_FALSE(zero.generator().has_value());

    const auto full = code_from_basis(centralizer_code(TwistSpec(Matrix::zero(p, 2, 2), Felt(2, p))));
    CHECK(full.dimension() == 4);
    CHECK(*full.generator() == Matrix::identity(p, 4));
}

TEST_CASE("min_distance") {
    CHECK(min_distance(repetition(Prime(3), 4)) == 4);
    CHECK(min_distance(full_space(Prime(3), 4)) == 1);

    // 7 | 2*3 + 1; the 7 codewords are b * vec(J_3).
    const auto c = comb_code(3, 2, 1, 3, 7);
    REQUIRE(c.dimension() == 1);
    for (std::uint64_t m = 1; m < 7; ++m) CHECK(hamming_weight(encode(c, c.message_at(m))) == 9);
    CHECK(min_distance(c) == 9);

    const Prime p(3);
    const LinearCode zero(p, 4, std::vector<Vector>{});
    CHECK_THROWS_WITH_AS(min_distance(zero), "zero code has no minimum distance", Error);
    CHECK_THROWS_AS(min_distance(full_space(Prime(5), 9)), GuardExceeded);
}

TEST_CASE("analyze") {
    const auto r4 = analyze(comb_code(2, 1, 1, 2, 3));
    CHECK(r4 == CodeReport{4, 1, 4, true, 3, 1, Rate{1, 4}});
    CHECK(r4.rate.str() == "1/4");

    const auto r9 = analyze(comb_code(3, 2, 1, 3, 7));
    CHECK(r9 == CodeReport{9, 1, 9, true, 8, 4, Rate{1, 9}});

    const auto rf = analyze(full_space(Prime(2), 6));
    CHECK(rf.min_distance == 1);
    CHECK(rf.mds);

    // A [4, 2, 2] code is not MDS: N - k + 1 = 3.
    const Prime p(2);
    const LinearCode c(p, 4, std::vector<Vector>{Vector(p, {1, 1, 0, 0}), Vector(p, {0, 0, 1, 1})});
    const auto r = analyze(c);
    CHECK(r.min_distance == 2);
    CHECK_FALSE(r.mds);
    CHECK(r.detect == 1);
    CHECK(r.correct == 0);
}

TEST_CASE("Singleton bound holds on random codes") {
    std::mt19937_64 rng(21);
    for (std::uint32_t pv : {2u, 3u, 5u}) {
        const Prime p(pv);
        for (int i = 0; i < 40; ++i) {
            std::vector<Vector> rows;
            for (int r = 0; r < 3; ++r) rows.push_back(testing::random_vector(rng, p, 7));
            const LinearCode c(p, 7, rows);
            if (c.dimension() == 0) continue;
            const auto d = min_distance(c);
            CHECK(d + c.dimension() <= c.length() + 1);
            CHECK(analyze(c) == analyze(c));
        }
    }
}

TEST_CASE("encode") {
    const auto code = repetition(Prime(3), 4);
    CHECK(encode(code, Vector(Prime(3), std::vector<std::uint32_t>{2})) == Vector(Prime(3), {2, 2, 2, 2}));
    CHECK(hamming_weight(encode(code, Vector(Prime(3), 1))) == 0);
    CHECK_THROWS_AS(encode(code, Vector(Prime(3), 2)), Error);

    std::mt19937_64 rng(4);
    const Prime p(5);
    std::vector<Vector> rows;
    for (int r = 0; r < 3; ++r) rows.push_back(testing::random_vector(rng, p, 6));
    const LinearCode c(p, 6, rows);
    for (int i = 0; i < 50; ++i) {
        const auto m1 = testing::random_vector(rng, p, c.dimension());
        const auto m2 = testing::random_vector(rng, p, c.dimension());
        CHECK(encode(c, vec_add(m1, m2)) == vec_add(encode(c, m1), encode(c, m2)));
    }
}

TEST_CASE("decode_nearest") {
    const Prime p3(3);
    const auto code = repetition(p3, 4);
    // Distances from (2,2,0,2) to 0000, 1111, 2222 are 3, 4, 1.
    const Vector word(p3, {2, 2, 0, 2});
    CHECK(hamming_distance(word, Vector(p3, {0, 0, 0, 0})) == 3);
    CHECK(hamming_distance(word, Vector(p3, {1, 1, 1, 1})) == 4);
    const auto r = decode_nearest(code, word);
    CHECK(r.status == DecodeStatus::unique);
    CHECK(r.codeword == Vector(p3, {2, 2, 2, 2}));
    CHECK(r.message == Vector(p3, std::vector<std::uint32_t>{2}));
    CHECK(r.distance == 1);

    const auto exact = decode_nearest(code, Vector(p3, {1, 1, 1, 1}));
    CHECK(exact.status == DecodeStatus::unique);
    CHECK(exact.distance == 0);

    const Prime p2(2);
    const auto tie = decode_nearest(repetition(p2, 4), Vector(p2, {1, 1, 0, 0}));
    CHECK(tie.status == DecodeStatus::ambiguous);
    CHECK(tie.distance == 2);

    CHECK_THROWS_AS(decode_nearest(code, Vector(p3, 3)), Error);
    CHECK_THROWS_AS(decode_nearest(full_space(Prime(5), 9), Vector(Prime(5), 9)), GuardExceeded);
}

TEST_CASE("contains") {
    const auto code = repetition(Prime(5), 3);
    CHECK(code.contains(Vector(Prime(5), {4, 4, 4})));
    CHECK_FALSE(code.contains(Vector(Prime(5), {4, 4, 3})));
}
