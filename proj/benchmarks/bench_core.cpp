#include <benchmark/benchmark.h>

#include <map>

#include "percolab/dfs.hpp"
#include "percolab/generators.hpp"
#include "percolab/harness.hpp"
#include "percolab/percolation.hpp"

using namespace percolab;

namespace {

const Graph& regular_graph(std::size_t n) {
    static std::map<std::size_t, Graph> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, random_regular(n, 10, 1)).first;
    return it->second;
}

void BM_Sample(benchmark::State& state) {
    const Graph& g = regular_graph(static_cast<std::size_t>(state.range(0)));
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(sample(g, 0.15, ++seed).kept_count());
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_Sample)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_DfsRun(benchmark::State& state) {
    const Graph& g = regular_graph(static_cast<std::size_t>(state.range(0)));
    const SubgraphSample s = sample(g, 0.15, 3);
    const DfsOptions opts{.record_log = state.range(1) != 0};
    for (auto _ : state)
        benchmark::DoNotOptimize(run(g, s, opts).max_u);
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_DfsRun)->ArgsProduct({{1 << 10, 1 << 13, 1 << 16}, {0, 1}});

void BM_Girth(benchmark::State& state) {
    const Graph g = pp_incidence(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(girth(g).length);
}
BENCHMARK(BM_Girth)->Arg(7)->Arg(13)->Arg(31);

void BM_TrialMetrics(benchmark::State& state) {
    const Graph g = complete(static_cast<std::size_t>(state.range(0)));
    const double p = 1.5 / static_cast<double>(g.order() - 1);
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(trial_metrics(g, p, ++seed).cycle_length);
}
BENCHMARK(BM_TrialMetrics)->Arg(201)->Arg(1001);

void BM_RandomRegular(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(random_regular(static_cast<std::size_t>(state.range(0)), 10, ++seed).size());
}
BENCHMARK(BM_RandomRegular)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
