#include <benchmark/benchmark.h>

#include "chebdisc/exact.hpp"
#include "chebdisc/expansion.hpp"
#include "chebdisc/mapping.hpp"
#include "chebdisc/special.hpp"
#include "chebdisc/zeros.hpp"

using namespace chebdisc;

static void BM_EvalExact(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eval_exact({N / 2, N + 1, Rational(N / 3)}));
}
BENCHMARK(BM_EvalExact)->Arg(50)->Arg(100)->Arg(200)->Arg(400);

static void BM_SolveMonotone(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(solve_eta_gamma(0.04, 0.5));
}
BENCHMARK(BM_SolveMonotone);

static void BM_SolveOscillatory(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(solve_eta_gamma(0.4, 0.5));
}
BENCHMARK(BM_SolveOscillatory);

static void BM_KummerM(benchmark::State& state) {
    const int x = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kummer_M(x, -0.3 * x));
}
BENCHMARK(BM_KummerM)->Arg(10)->Arg(100)->Arg(1000);

static void BM_AsymptoticValue(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(asymptotic_value(N / 2, N, Rational(2 * N / 5)));
}
BENCHMARK(BM_AsymptoticValue)->Arg(100)->Arg(400);

static void BM_ZerosExact(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(zeros_exact(N / 2, N, 12));
}
BENCHMARK(BM_ZerosExact)->Arg(40)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
