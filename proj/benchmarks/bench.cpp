#include "isingff/formfactor.hpp"
#include "isingff/hyper.hpp"
#include "isingff/named_ops.hpp"
#include "isingff/oracle.hpp"
#include "isingff/symprod.hpp"

#include <benchmark/benchmark.h>

using namespace isingff;

static void BM_SeriesMul(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    Series a = F_series(3, order);
    Series b = F_series(4, order);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
    state.SetComplexityN(order);
}
BENCHMARK(BM_SeriesMul)->Arg(64)->Arg(128)->Arg(256)->Complexity(benchmark::oNSquared);

static void BM_QuadraticLayer(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(make_f2(N));
    }
}
BENCHMARK(BM_QuadraticLayer)->Arg(2)->Arg(6)->Arg(12);

static void BM_QuarticSolve(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(make_f4(N));
}
BENCHMARK(BM_QuarticSolve)->Arg(1)->Arg(4)->Arg(8);

static void BM_OracleTwoFold(benchmark::State& state) {
    int N = 2;
    int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        clear_oracle_cache();
        benchmark::DoNotOptimize(oracle_f(2, N, order));
    }
}
BENCHMARK(BM_OracleTwoFold)->Arg(10)->Arg(14)->Arg(18);

static void BM_SymmetricSquare(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    DiffOp o2 = build_named("O2", N);
    for (auto _ : state) benchmark::DoNotOptimize(symmetric_power(o2, 2));
}
BENCHMARK(BM_SymmetricSquare)->Arg(1)->Arg(4);

static void BM_WronskianResidual(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(wronskian_residual(N, N + 12));
}
BENCHMARK(BM_WronskianResidual)->Arg(1)->Arg(6);

BENCHMARK_MAIN();
