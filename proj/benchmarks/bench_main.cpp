#include <benchmark/benchmark.h>

#include "mirrorgw/equivariant.hpp"
#include "mirrorgw/localization.hpp"
#include "mirrorgw/mirror_engine.hpp"

using namespace mgw;

static void BM_SepticTable(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        MirrorEngine e(7, 7, d);
        benchmark::DoNotOptimize(e.bps(d, 0, 2, 0, 2));
    }
}
BENCHMARK(BM_SepticTable)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_InstantonNumbers(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        MirrorEngine e(n, n, 8);
        benchmark::DoNotOptimize(e.bps(8, 0, 1, 0, n - 4));
    }
}
BENCHMARK(BM_InstantonNumbers)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_EquivariantModel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    AlphaSpec spec = AlphaSpec::default_for(n, n, 3);
    for (auto _ : state) {
        EquivariantModel m(spec, 3);
        benchmark::DoNotOptimize(m.z(0));
    }
}
BENCHMARK(BM_EquivariantModel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_MpcCheck(benchmark::State& state) {
    EquivariantModel m(AlphaSpec::default_for(3, 3, 3), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_mpc(m.y_unit(), m.y_minus_1(), m.spec(), 3, MpcMode::interpolation));
}
BENCHMARK(BM_MpcCheck)->Unit(benchmark::kMillisecond);

static void BM_LocalizationOracle(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    AlphaSpec spec = AlphaSpec::default_for(3, 3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(oracle_zp_series(spec, 0, d));
}
BENCHMARK(BM_LocalizationOracle)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_TreeEnumeration(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_trees(4, d, 2));
}
BENCHMARK(BM_TreeEnumeration)->DenseRange(1, 3);

BENCHMARK_MAIN();
