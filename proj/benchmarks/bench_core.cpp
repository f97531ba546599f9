#include <benchmark/benchmark.h>

#include "edgemin/annealing.hpp"
#include "edgemin/edm_ilp.hpp"
#include "edgemin/generators.hpp"
#include "edgemin/orbit.hpp"
#include "edgemin/symplectic.hpp"

using namespace edgemin;

static void BM_LocalComplement(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Graph g = erdos_renyi(n, 0.6, 1);
    Vertex v = 0;
    for (auto _ : state) {
        g.local_complement_in_place(v);
        v = (v + 1) % n;
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_LocalComplement)->Arg(16)->Arg(100)->Arg(400);

static void BM_EdmSa(benchmark::State& state) {
    const Graph g = erdos_renyi(100, 0.6, 2);
    SaConfig cfg;
    cfg.k_max = static_cast<std::size_t>(state.range(0));
    cfg.record_trace = false;
    for (auto _ : state) benchmark::DoNotOptimize(edm_sa(g, cfg));
}
BENCHMARK(BM_EdmSa)->Arg(50)->Arg(1050)->Unit(benchmark::kMillisecond);

static void BM_OrbitEnumeration(benchmark::State& state) {
    const Graph g = erdos_renyi(static_cast<std::size_t>(state.range(0)), 0.5, 3);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_orbit(g).size());
}
BENCHMARK(BM_OrbitEnumeration)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);

static void BM_EdmIlp(benchmark::State& state) {
    const Graph g = erdos_renyi(static_cast<std::size_t>(state.range(0)), 0.5, 4);
    for (auto _ : state) benchmark::DoNotOptimize(edm_ilp(g).graph);
}
BENCHMARK(BM_EdmIlp)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_LcEquivalent(benchmark::State& state) {
    const Graph g = erdos_renyi(static_cast<std::size_t>(state.range(0)), 0.5, 5);
    const Graph h = apply_lc_sequence(g, std::vector<Vertex>{0, 1, 2});
    for (auto _ : state) benchmark::DoNotOptimize(lc_equivalent(h, g));
}
BENCHMARK(BM_LcEquivalent)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK_MAIN();
