// OpenMP kernels must agree with their serial references for any thread count.

#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "doctest.h"
#include "support.hpp"
#include "tcc/channel.hpp"
#include "tcc/comb.hpp"
#include "tcc/verify.hpp"

using namespace tcc;

namespace {

void with_threads(int n) {
#ifdef _OPENMP
    omp_set_num_threads(n);
#else
    (void)n;
#endif
}

LinearCode random_code(std::mt19937_64& rng, Prime p, std::size_t k, std::size_t length) {
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < k; ++r) rows.push_back(testing::random_vector(rng, p, length));
    return LinearCode(p, length, rows);
}

}  // namespace

TEST_CASE("brute force centralizer: parallel == serial == enumeration oracle") {
    std::mt19937_64 rng(31);
    for (int threads : {1, 2, 3, 8}) {
        with_threads(threads);
        for (std::uint32_t pv : {2u, 3u}) {
            const Prime p(pv);
            for (int i = 0; i < 4; ++i) {
                const TwistSpec spec(testing::random_matrix(rng, p, 2, 2), testing::random_felt(rng, p));
                const auto par = brute_force_centralizer(spec);
                CHECK(par == serial::brute_force_centralizer(spec));
                CHECK(par == testing::enumerate_centralizer(spec.A, spec.a));
            }
        }
    }
    with_threads(4);
}

TEST_CASE("min distance and decoding: parallel == serial") {
    std::mt19937_64 rng(32);
    for (int threads : {1, 3, 8}) {
        with_threads(threads);
        for (std::uint32_t pv : {2u, 3u, 5u}) {
            const Prime p(pv);
            for (int i = 0; i < 10; ++i) {
                const auto code = random_code(rng, p, 1 + i % 3, 6);
                if (code.dimension() == 0) continue;
                CHECK(min_distance(code) == serial::min_distance(code));
                for (int w = 0; w < 5; ++w) {
                    const auto word = testing::random_vector(rng, p, 6);
                    const auto a = decode_nearest(code, word);
                    const auto b = serial::decode_nearest(code, word);
                    CHECK(a.status == b.status);
                    CHECK(a.distance == b.distance);
                    CHECK(a.codeword == b.codeword);
                    CHECK(a.message == b.message);
                }
            }
        }
    }
    with_threads(4);
}

TEST_CASE("channel sweeps: parallel == serial") {
    std::mt19937_64 rng(33);
    for (int threads : {1, 4}) {
        with_threads(threads);
        for (std::uint32_t pv : {2u, 3u}) {
            const Prime p(pv);
            for (int i = 0; i < 6; ++i) {
                const auto code = random_code(rng, p, 1 + i % 2, 6);
                for (std::size_t t = 0; t <= 3; ++t) {
                    CHECK(exhaustive_correction_check(code, t) == serial::exhaustive_correction_check(code, t));
                    CHECK(exhaustive_detection_check(code, t) == serial::exhaustive_detection_check(code, t));
                }
                if (code.dimension() > 0)
                    CHECK(monte_carlo(code, 2, 300, 99) == serial::monte_carlo(code, 2, 300, 99));
            }
        }
        const Prime p5(5);
        const auto code = code_from_basis(centralizer_code(TwistSpec(comb_matrix(CombParams(3, 3, 1, p5)), Felt(2, p5))));
        CHECK(monte_carlo(code, 9, 400, 5) == serial::monte_carlo(code, 9, 400, 5));
        CHECK(exhaustive_correction_check(code, 3) == serial::exhaustive_correction_check(code, 3));
    }
    with_threads(4);
}

TEST_CASE("verify sweep: parallel == serial") {
    with_threads(3);
    CHECK(verify_sweep(5, 3) == serial::verify_sweep(5, 3));
    with_threads(4);
}
