#include "doctest.h"
#include "support.hpp"
#include "tcc/field.hpp"

using namespace tcc;

TEST_CASE("prime validation") {
    CHECK_NOTHROW(Prime(2));
    CHECK_NOTHROW(Prime(2147483647));  // 2^31 - 1 is prime
    CHECK_THROWS_AS(Prime(1), Error);
    CHECK_THROWS_AS(Prime(9), Error);
    CHECK_THROWS_AS(Prime(4294967291ULL), Error);  // prime, but above 2^31 - 1
    CHECK(is_prime(997));
    CHECK_FALSE(is_prime(1001));
}

TEST_CASE("felt arithmetic examples") {
    const Prime p3(3), p2(2), p5(5);
    CHECK(felt_add(Felt(2, p3), Felt(2, p3)) == Felt(1, p3));
    for (std::uint32_t x = 0; x < 5; ++x) CHECK(felt_mul(Felt(0, p5), Felt(x, p5)).is_zero());
    CHECK(felt_neg(Felt(1, p2)) == Felt(1, p2));
    CHECK(felt_inv(Felt(2, p5)) == Felt(3, p5));
    CHECK(felt_inv(Felt(1, Prime(13))) == Felt(1, Prime(13)));
    CHECK_THROWS_WITH_AS(felt_inv(Felt(0, p5)), "zero has no inverse", Error);
    CHECK(Felt::from_signed(-6, Prime(7)) == Felt(1, Prime(7)));
}

TEST_CASE("mixed fields are rejected") {
    CHECK_THROWS_AS(felt_add(Felt(1, Prime(3)), Felt(1, Prime(5))), Error);
    CHECK_THROWS_AS(felt_mul(Felt(1, Prime(3)), Felt(1, Prime(5))), Error);
}

TEST_CASE("large prime products do not overflow") {
    const Prime p(2147483647);
    const Felt a(p.value() - 1, p);
    CHECK(a * a == Felt(1, p));  // (-1)^2
    CHECK(felt_inv(a) * a == Felt(1, p));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(7);
    for (std::uint32_t pv : {2u, 3u, 5u, 7u}) {
        const Prime p(pv);
        for (int i = 0; i < 200; ++i) {
            const auto a = testing::random_felt(rng, p), b = testing::random_felt(rng, p), c = testing::random_felt(rng, p);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + -a).is_zero());
            if (!a.is_zero()) CHECK(felt_inv(a) * a == Felt(1, p));
        }
    }
}
