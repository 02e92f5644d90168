#include <benchmark/benchmark.h>

#include "kazcalc/bordism.hpp"
#include "kazcalc/classifying.hpp"
#include "kazcalc/consistency.hpp"
#include "kazcalc/spectral.hpp"

using namespace kazcalc;

static void BM_SeriesMul(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    const auto a = space_series(ClassifyingSpace::bso_stable(), n);
    const auto b = space_series(ClassifyingSpace::bso(5), n);
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMul)->Arg(60)->Arg(240)->Arg(960);

static void BM_StableRingSeries(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(space_series(ClassifyingSpace::bso_stable(), n));
}
BENCHMARK(BM_StableRingSeries)->Arg(60)->Arg(240)->Arg(960);

static void BM_SpSeries(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    const auto profile = BettiProfile::from_series(space_series(ClassifyingSpace::bso(4), n));
    for (auto _ : state)
        benchmark::DoNotOptimize(sp_series(profile, n));
}
BENCHMARK(BM_SpSeries)->Arg(60)->Arg(240);

static void BM_KazarianSeries(benchmark::State &state)
{
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kazarian_homology_series(SingularityFamily::prim(k)));
        benchmark::DoNotOptimize(kazarian_homology_series(SingularityFamily::morin(k)));
    }
}
BENCHMARK(BM_KazarianSeries)->DenseRange(1, 9, 4);

static void BM_FoldTorsionScan(benchmark::State &state)
{
    for (auto _ : state)
        for (std::uint64_t m = 1; m <= 10000; ++m)
            benchmark::DoNotOptimize(fold_torsion_parameter(m));
}
BENCHMARK(BM_FoldTorsionScan);

static void BM_ConsistencySuite(benchmark::State &state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(run_consistency_suite());
}
BENCHMARK(BM_ConsistencySuite)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
