// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "tcc/centralizer.hpp"
#include "tcc/channel.hpp"
#include "tcc/comb.hpp"
#include "tcc/verify.hpp"

namespace {

using namespace tcc;

TwistSpec comb_spec(std::size_t n, std::uint32_t x, std::uint32_t y, std::uint32_t a, std::uint32_t pv) {
    const Prime p(pv);
    return TwistSpec(comb_matrix(CombParams(n, x, y, p)), Felt(a, p));
}

LinearCode nine_one_nine() { return code_from_basis(centralizer_code(comb_spec(3, 3, 1, 2, 5))); }

void BM_BruteForceSerial(benchmark::State& state) {
    const auto spec = comb_spec(3, 1, 1, 2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(serial::brute_force_centralizer(spec));
}
BENCHMARK(BM_BruteForceSerial)->Unit(benchmark::kMillisecond);

void BM_BruteForceOmp(benchmark::State& state) {
    const auto spec = comb_spec(3, 1, 1, 2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_centralizer(spec));
}
BENCHMARK(BM_BruteForceOmp)->Unit(benchmark::kMillisecond);

void BM_CorrectionSweepSerial(benchmark::State& state) {
    const auto code = nine_one_nine();
    for (auto _ : state) benchmark::DoNotOptimize(serial::exhaustive_correction_check(code, 4));
}
BENCHMARK(BM_CorrectionSweepSerial)->Unit(benchmark::kMillisecond);

void BM_CorrectionSweepOmp(benchmark::State& state) {
    const auto code = nine_one_nine();
    for (auto _ : state) benchmark::DoNotOptimize(exhaustive_correction_check(code, 4));
}
BENCHMARK(BM_CorrectionSweepOmp)->Unit(benchmark::kMillisecond);

void BM_MonteCarloSerial(benchmark::State& state) {
    const auto code = nine_one_nine();
    for (auto _ : state) benchmark::DoNotOptimize(serial::monte_carlo(code, 6, 10000, 1));
}
BENCHMARK(BM_MonteCarloSerial)->Unit(benchmark::kMillisecond);

void BM_MonteCarloOmp(benchmark::State& state) {
    const auto code = nine_one_nine();
    for (auto _ : state) benchmark::DoNotOptimize(monte_carlo(code, 6, 10000, 1));
}
BENCHMARK(BM_MonteCarloOmp)->Unit(benchmark::kMillisecond);

void BM_VerifySweepSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(serial::verify_sweep(7, 4));
}
BENCHMARK(BM_VerifySweepSerial)->Unit(benchmark::kMillisecond);

void BM_VerifySweepOmp(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_sweep(7, 4));
}
BENCHMARK(BM_VerifySweepOmp)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
