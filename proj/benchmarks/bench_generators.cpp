// Generation cost per family, plus the usw walk on its own since repair
// calls it constantly.

#include <benchmark/benchmark.h>

#include "uswsim/generators.hpp"
#include "uswsim/metrics.hpp"
#include "uswsim/rng.hpp"

using namespace uswsim;

namespace {

void bm_generate(benchmark::State& state, Family family) {
    GeneratorConfig gc;
    gc.family = family;
    gc.n = static_cast<std::size_t>(state.range(0));
    gc.p = family == Family::Random ? 10.0 / static_cast<double>(gc.n - 1) : 0.01;
    gc.m_attach = 1;
    gc.k = 10;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        gc.seed = seed++;
        benchmark::DoNotOptimize(generate(gc));
    }
}
BENCHMARK_CAPTURE(bm_generate, er, Family::Random)->Arg(1000)->Arg(4000);
BENCHMARK_CAPTURE(bm_generate, pl, Family::PowerLaw)->Arg(1000)->Arg(4000);
BENCHMARK_CAPTURE(bm_generate, ws, Family::SmallWorld)->Arg(1000)->Arg(4000);
BENCHMARK_CAPTURE(bm_generate, usw, Family::Usw)->Arg(1000)->Arg(4000);

void bm_usw_walk(benchmark::State& state) {
    GeneratorConfig gc;
    gc.family = Family::Usw;
    gc.n = static_cast<std::size_t>(state.range(0));
    gc.seed = 3;
    const Graph base = generate(gc);
    std::vector<VertexId> pool;
    for (VertexId v = 0; v < base.capacity(); ++v)
        if (base.is_alive(v) && v != 0) pool.push_back(v);
    Rng rng(5);
    for (auto _ : state) {
        Graph g = base;
        std::vector<VertexId> failed;
        benchmark::DoNotOptimize(usw_attach_walk(g, 0, pool, gc.usw, failed, rng));
    }
}
BENCHMARK(bm_usw_walk)->Arg(1000)->Arg(4000);

void bm_take_snapshot(benchmark::State& state) {
    GeneratorConfig gc;
    gc.family = Family::SmallWorld;
    gc.n = static_cast<std::size_t>(state.range(0));
    gc.k = 10;
    gc.p = 0.01;
    gc.seed = 9;
    const Graph g = generate(gc);
    for (auto _ : state) benchmark::DoNotOptimize(take_snapshot(g));
}
BENCHMARK(bm_take_snapshot)->Arg(300)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
