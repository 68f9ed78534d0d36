#include "pebbling/certificate.hpp"
#include "pebbling/constructions.hpp"
#include "pebbling/engine.hpp"
#include "pebbling/enumerate.hpp"
#include "pebbling/solver.hpp"

#include <benchmark/benchmark.h>

using namespace pebbling;

static void BM_OptimalH(benchmark::State & state)
{
    Graph h = h_family(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(optimal_pebbling_number(h).value);
}
BENCHMARK(BM_OptimalH)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_RestrictedH(benchmark::State & state)
{
    Graph h = h_family(static_cast<int>(state.range(0)));
    SolverOptions options{state.range(1) != 0, 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(restricted_optimal_pebbling_number(h, 2, options).value);
    state.SetLabel(options.weight_pruning ? "pruned" : "unpruned");
}
BENCHMARK(BM_RestrictedH)->Args({4, 1})->Args({4, 0})->Args({6, 1})->Args({6, 0})->Unit(benchmark::kMillisecond);

static void BM_PathWorkers(benchmark::State & state)
{
    Graph p = path_graph(static_cast<int>(state.range(0)));
    SolverOptions options{true, static_cast<unsigned>(state.range(1))};
    for (auto _ : state)
        benchmark::DoNotOptimize(optimal_pebbling_number(p, options).value);
}
BENCHMARK(BM_PathWorkers)->Args({12, 1})->Args({12, 2})->Args({12, 4})->Unit(benchmark::kMillisecond);

static void BM_Product(benchmark::State & state)
{
    Graph p = lexicographic_product(path_graph(4), complete_graph(static_cast<int>(state.range(0)))).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(restricted_optimal_pebbling_number(p, 2).value);
}
BENCHMARK(BM_Product)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_KReachable(benchmark::State & state)
{
    Graph c = cycle_graph(static_cast<int>(state.range(0)));
    Distribution d(c.order());
    d.set(0, 8);
    d.set(1, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(k_reachable(c, d, c.order() / 2, 1, {state.range(1) != 0}));
}
BENCHMARK(BM_KReachable)->Args({8, 1})->Args({8, 0})->Args({10, 1})->Args({10, 0});

static void BM_Domination(benchmark::State & state)
{
    Graph h = h_family(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(domination_number(h).value);
        benchmark::DoNotOptimize(roman_domination_number(h).value);
    }
}
BENCHMARK(BM_Domination)->Arg(4)->Arg(8)->Arg(12);

static void BM_VerifyCertificate(benchmark::State & state)
{
    Graph h = h_family(6);
    auto cert = make_certificate(h, restricted_optimal_pebbling_number(h, 2).witness, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_certificate(h, cert));
}
BENCHMARK(BM_VerifyCertificate);

static void BM_ConnectedClasses(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(connected_graphs(static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_ConnectedClasses)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
