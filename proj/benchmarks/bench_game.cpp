// Whole-game and repair-turn costs; the efficacy recursion is included
// because its state dedup is the only hash-heavy path in the project.

#include <benchmark/benchmark.h>

#include "uswsim/attack.hpp"
#include "uswsim/game.hpp"
#include "uswsim/generators.hpp"
#include "uswsim/graph.hpp"
#include "uswsim/repair.hpp"
#include "uswsim/rng.hpp"

using namespace uswsim;

namespace {

Graph make_ws(std::size_t n, std::uint64_t seed) {
    GeneratorConfig gc;
    gc.family = Family::SmallWorld;
    gc.n = n;
    gc.k = 10;
    gc.p = 0.01;
    gc.seed = seed;
    return generate(gc);
}

void bm_play_game(benchmark::State& state) {
    const Graph base = make_ws(static_cast<std::size_t>(state.range(0)), 2);
    GameConfig cfg;
    cfg.profile = AttackProfile::parse("D-V-H");
    cfg.shots_per_turn = 10;
    cfg.max_turns = 5;
    for (auto _ : state) {
        Graph g = base;
        Rng rng(4);
        benchmark::DoNotOptimize(play_game(g, cfg, rng));
    }
}
BENCHMARK(bm_play_game)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

void bm_repair_standard(benchmark::State& state) {
    Graph base = make_ws(1000, 2);
    Rng dmg(6);
    AttackProfile profile = AttackProfile::parse("D-V-H");
    for (int i = 0; i < 100; ++i) attack_shot(base, profile, dmg);
    RepairPolicy policy;
    for (auto _ : state) {
        Graph g = base;
        Rng rng(8);
        benchmark::DoNotOptimize(repair_turn_standard(g, policy, rng));
    }
}
BENCHMARK(bm_repair_standard);

void bm_repair_usw(benchmark::State& state) {
    const Graph base = make_ws(1000, 2);
    RepairPolicy policy;
    policy.kind = RepairKind::Usw;
    policy.usw = UswParams{};
    for (auto _ : state) {
        Graph g = base;
        Rng rng(8);
        benchmark::DoNotOptimize(repair_turn_usw(g, policy, rng));
    }
}
BENCHMARK(bm_repair_usw);

void bm_efficacy(benchmark::State& state) {
    // barbell-ish: two K5s and a bridge, the shape the recursion fans out on
    Graph g(10);
    for (VertexId u = 0; u < 5; ++u)
        for (VertexId v = u + 1; v < 5; ++v) g.add_edge(u, v);
    for (VertexId u = 5; u < 10; ++u)
        for (VertexId v = u + 1; v < 10; ++v) g.add_edge(u, v);
    g.add_edge(0, 5);
    const AttackProfile profile = AttackProfile::parse("B-E-L");
    for (auto _ : state) benchmark::DoNotOptimize(recursive_efficacy(g, profile));
}
BENCHMARK(bm_efficacy);

}  // namespace

BENCHMARK_MAIN();
