// Betweenness dominates attack cost (one recomputation per shot), so these
// are the numbers to watch when touching centrality.cpp or Graph internals.

#include <benchmark/benchmark.h>

#include "uswsim/attack.hpp"
#include "uswsim/centrality.hpp"
#include "uswsim/generators.hpp"
#include "uswsim/rng.hpp"

using namespace uswsim;

namespace {

Graph make_er(std::size_t n, double mean_deg) {
    GeneratorConfig gc;
    gc.family = Family::Random;
    gc.n = n;
    gc.p = mean_deg / static_cast<double>(n - 1);
    gc.seed = 7;
    return generate(gc);
}

void bm_betweenness_vertex(benchmark::State& state) {
    const Graph g = make_er(static_cast<std::size_t>(state.range(0)), 10.0);
    for (auto _ : state) benchmark::DoNotOptimize(betweenness_vertex(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_betweenness_vertex)->Arg(100)->Arg(300)->Arg(1000)->Complexity();

void bm_betweenness_edge(benchmark::State& state) {
    const Graph g = make_er(static_cast<std::size_t>(state.range(0)), 10.0);
    for (auto _ : state) benchmark::DoNotOptimize(betweenness_edge(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_betweenness_edge)->Arg(100)->Arg(300)->Arg(1000)->Complexity();

void bm_closeness(benchmark::State& state) {
    const Graph g = make_er(static_cast<std::size_t>(state.range(0)), 10.0);
    for (auto _ : state) benchmark::DoNotOptimize(closeness_centrality(g));
}
BENCHMARK(bm_closeness)->Arg(100)->Arg(1000);

void bm_candidate_set(benchmark::State& state) {
    const Graph g = make_er(1000, 10.0);
    const AttackProfile profile = AttackProfile::parse("B-V-H");
    for (auto _ : state) benchmark::DoNotOptimize(candidate_set(g, profile));
}
BENCHMARK(bm_candidate_set);

// the per-shot cost a game actually pays: recompute, pick, remove
void bm_attack_shot(benchmark::State& state) {
    for (auto _ : state) {
        state.PauseTiming();
        Graph g = make_er(static_cast<std::size_t>(state.range(0)), 10.0);
        Rng rng(11);
        state.ResumeTiming();
        benchmark::DoNotOptimize(attack_shot(g, AttackProfile::parse("B-V-H"), rng));
    }
}
BENCHMARK(bm_attack_shot)->Arg(300)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
