#include "qfray/expansion.hpp"
#include "qfray/shape.hpp"

#include <benchmark/benchmark.h>

using namespace qfray;

namespace {

const ShiftedSkewShape& bench_shape()
{
    static const ShiftedSkewShape s = from_frayed_code({Orientation::RightThenUp, {3, 3, 1, 2, 1}});
    return s;
}

void BM_QExpansionSerial(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(q_expansion_serial(bench_shape()));
}

void BM_QExpansionParallel(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(q_expansion(bench_shape()));
}

void BM_QExpansionUnpruned(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(q_expansion_serial(bench_shape(), {.prune = false}));
}

void BM_SeriesFrontier(benchmark::State& state)
{
    auto s = parse_shape("6 5 2 1/5 1");
    for (auto _ : state)
        benchmark::DoNotOptimize(monomial_series(s, static_cast<int>(state.range(0))));
}

void BM_SeriesReference(benchmark::State& state)
{
    auto s = parse_shape("6 5 2 1/5 1");
    for (auto _ : state)
        benchmark::DoNotOptimize(monomial_series_reference(s, static_cast<int>(state.range(0))));
}

} // namespace

BENCHMARK(BM_QExpansionSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QExpansionParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QExpansionUnpruned)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeriesFrontier)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeriesReference)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
