#include "gkm/catalog.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_BettiQuadrangleOdd(benchmark::State& state) {
    const gkm::OddGkmGraph g = gkm::make_quadrangle_odd();
    for (auto _ : state) benchmark::DoNotOptimize(gkm::ordinary_betti(g));
}
BENCHMARK(BM_BettiQuadrangleOdd);

void BM_BettiM9(benchmark::State& state) {
    const gkm::OddGkmGraph g = gkm::make_m9();
    for (auto _ : state) benchmark::DoNotOptimize(gkm::ordinary_betti(g));
}
BENCHMARK(BM_BettiM9)->Unit(benchmark::kMillisecond);

void BM_EquivariantDimM9Degree(benchmark::State& state) {
    const gkm::OddGkmGraph g = gkm::make_m9();
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gkm::equivariant_dim(g, m));
}
BENCHMARK(BM_EquivariantDimM9Degree)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_SplittingCheckChain(benchmark::State& state) {
    const gkm::OddGkmGraph g = gkm::make_chain();
    for (auto _ : state) benchmark::DoNotOptimize(gkm::splitting_check(g));
}
BENCHMARK(BM_SplittingCheckChain)->Unit(benchmark::kMillisecond);

void BM_InferConnectionCube3(benchmark::State& state) {
    const gkm::EvenGkmGraph g = gkm::make_cube3();
    for (auto _ : state) benchmark::DoNotOptimize(gkm::infer_connection_gkm3(g));
}
BENCHMARK(BM_InferConnectionCube3);

}  // namespace

BENCHMARK_MAIN();
