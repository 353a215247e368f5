#include "symsq/hecke/eigenforms.hpp"
#include "symsq/hecke/power_series.hpp"
#include "symsq/lfun/lvalue.hpp"
#include "symsq/mollifier/mollifier.hpp"
#include "symsq/petersson/bessel.hpp"
#include "symsq/petersson/kloosterman.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_DeltaSeries(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(symsq::hecke::delta_series(n));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DeltaSeries)->Arg(2500)->Arg(20000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_VictorMillerBasis(benchmark::State& state) {
    int weight = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(symsq::hecke::victor_miller_basis(weight, 2500));
}
BENCHMARK(BM_VictorMillerBasis)->Arg(12)->Arg(28)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_Kloosterman(benchmark::State& state) {
    std::uint64_t c = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(symsq::petersson::kloosterman(1, 2, c));
}
BENCHMARK(BM_Kloosterman)->Arg(997)->Arg(9973)->Arg(99991);

void BM_BesselSeries(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(symsq::petersson::bessel_j(199, 3.7));
}
BENCHMARK(BM_BesselSeries);

void BM_BesselIntegral(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(symsq::petersson::bessel_j(11, 40.0));
}
BENCHMARK(BM_BesselIntegral);

void BM_CentralValue(benchmark::State& state) {
    int weight = static_cast<int>(state.range(0));
    auto coverage = symsq::lfun::afe_terms_needed(weight, {0.5L, 0.0L});
    auto forms = symsq::hecke::eigenforms(weight, coverage, 128);
    for (auto _ : state)
        benchmark::DoNotOptimize(symsq::lfun::lvalue(forms[0], {0.5L, 0.0L}));
}
BENCHMARK(BM_CentralValue)->Arg(12)->Arg(60)->Unit(benchmark::kMicrosecond);

void BM_MollifierExpansion(benchmark::State& state) {
    auto params = symsq::mollifier::build_params(0.25, 28, 1, 1.0, true);
    for (auto _ : state)
        benchmark::DoNotOptimize(symsq::mollifier::expand_polynomial(params, -0.5, 2'000'000));
}
BENCHMARK(BM_MollifierExpansion)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
