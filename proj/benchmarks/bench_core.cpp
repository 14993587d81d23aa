#include <benchmark/benchmark.h>

#include "conwaylink/conway.hpp"
#include "conwaylink/rationality.hpp"
#include "conwaylink/walgebra.hpp"

namespace {

cwl::LaurentPoly dense_poly(const std::string& var, int deg) {
    cwl::LaurentPoly p({var});
    for (int k = -deg; k <= deg; ++k) p.insert({k, 0}, cwl::Int(k * k + 1));
    return p;
}

void BM_PolyMul(benchmark::State& state) {
    const int deg = static_cast<int>(state.range(0));
    cwl::LaurentPoly a = dense_poly("z", deg);
    cwl::LaurentPoly b = dense_poly("z", deg);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PolyMul)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_NablaJ(benchmark::State& state) {
    const std::int64_t r = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(cwl::nabla_J(r));
}
BENCHMARK(BM_NablaJ)->RangeMultiplier(2)->Range(8, 512);

void BM_NablaJOracle(benchmark::State& state) {
    const std::int64_t r = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(cwl::nabla_J_oracle(r));
}
BENCHMARK(BM_NablaJOracle)->RangeMultiplier(2)->Range(2, 16);

void BM_OmegaOracle(benchmark::State& state) {
    const std::int64_t r = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(cwl::omega_Mr_oracle(r));
}
BENCHMARK(BM_OmegaOracle)->DenseRange(2, 8, 2);

void BM_SeriesInverse(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    cwl::TruncatedSeries s = cwl::TruncatedSeries::from_poly(cwl::nabla_J(32), order);
    for (auto _ : state) benchmark::DoNotOptimize(s.inverse());
}
BENCHMARK(BM_SeriesInverse)->RangeMultiplier(2)->Range(64, 1024);

void BM_FitRational(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    cwl::TruncatedSeries s =
        cwl::accumulate_product({cwl::make_stage(cwl::GrowthVariant::growth1, 2),
                                 cwl::make_stage(cwl::GrowthVariant::growth1, 100)},
                                order);
    for (auto _ : state) benchmark::DoNotOptimize(cwl::fit_rational(s, {6, 2}));
}
BENCHMARK(BM_FitRational)->Arg(37)->Arg(102);

void BM_OmegaToW(benchmark::State& state) {
    const std::int64_t r = state.range(0);
    cwl::LaurentPoly om = cwl::omega_Mr(r);
    for (auto _ : state) benchmark::DoNotOptimize(cwl::omega_to_w(om, 1));
}
BENCHMARK(BM_OmegaToW)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
