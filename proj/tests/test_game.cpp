#include <doctest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "uswsim/errors.hpp"
#include "uswsim/game.hpp"
#include "uswsim/io.hpp"

using namespace uswsim;

namespace {

Graph path(std::size_t n) {
    Graph g(n);
    for (VertexId i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(std::size_t n) {
    Graph g(n);
    for (VertexId i = 0; i < n; ++i) g.add_edge(i, static_cast<VertexId>((i + 1) % n));
    return g;
}

Graph complete(std::size_t n) {
    Graph g(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph star(std::size_t leaves) {
    Graph g(leaves + 1);
    for (VertexId i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

GameConfig basic_config(const char* token) {
    GameConfig config;
    config.profile = AttackProfile::parse(token);
    config.repair.kind = RepairKind::Standard;
    return config;
}

Graph er_graph(std::size_t n, double p, std::uint64_t seed) {
    GeneratorConfig gc;
    gc.family = Family::Random;
    gc.n = n;
    gc.p = p;
    gc.seed = seed;
    return generate(gc);
}

// flattens everything the log records, for replay comparisons
std::string log_fingerprint(const GameLog& log) {
    std::ostringstream out;
    out << (log.winner == Winner::Mallory ? "M" : "A") << ' ' << log.turns_played << ' '
        << log.shots_fired << ' ' << log.win_turn << ' ' << log.win_shot << ' ' << log.aborted
        << '\n';
    for (const auto& s : log.shots)
        out << s.turn << ' ' << s.shot << ' ' << s.removed.str() << ' '
            << format_double(s.damage_ratio) << ' ' << format_double(s.subgraph_damage) << '\n';
    for (const auto& t : log.turns) {
        for (const auto* m : {&t.start, &t.end_attack, &t.end_repair})
            out << m->n_alive << ' ' << m->m_alive << ' ' << m->lcc_size << ' '
                << format_double(m->damage_ratio) << ' '
                << format_double(m->avg_inverse_path_length) << ' ';
        out << t.repair_ran << ' ' << t.repair.vertices_restored << ' ' << t.repair.edges_attempted
            << ' ' << t.repair.edges_restored << '\n';
    }
    return out.str();
}

}  // namespace

TEST_CASE("one edge shot wins the smallest possible game") {
    Graph g = path(2);
    auto config = basic_config("B-E-H");
    config.shots_per_turn = 1;
    Rng rng(1);
    auto log = play_game(g, config, rng);
    CHECK(log.winner == Winner::Mallory);
    CHECK(log.win_turn == 1);
    CHECK(log.win_shot == 1);
    CHECK(log.turns_played == 1);
    CHECK(log.shots_fired == 1);
    REQUIRE(log.shots.size() == 1);
    CHECK(log.shots[0].removed == ComponentRef::edge(0, 1));
    CHECK(log.shots[0].damage_ratio == doctest::Approx(0.5));
    REQUIRE(log.turns.size() == 1);
    CHECK(log.turns[0].end_attack.lcc_size == 1);
    CHECK(log.turns[0].end_attack.n_alive == 2);
    CHECK(!log.turns[0].repair_ran);
}

TEST_CASE("remaining shots are forfeit once the graph splits") {
    Graph g = path(2);
    auto config = basic_config("B-E-H");
    config.shots_per_turn = 5;
    Rng rng(1);
    auto log = play_game(g, config, rng);
    CHECK(log.winner == Winner::Mallory);
    CHECK(log.shots_fired == 1);
}

TEST_CASE("complete graphs never lose a vertex game") {
    // one survivor still counts as connected, so K20 holds out forever
    for (const auto& profile : all_profiles()) {
        if (profile.component != ComponentRef::Kind::Vertex) continue;
        Graph g = complete(20);
        GameConfig config;
        config.profile = profile;
        config.shots_per_turn = 1;
        config.max_turns = 30;
        config.repair_enabled = false;
        Rng rng(5);
        auto log = play_game(g, config, rng);
        CHECK(log.winner == Winner::Alice);
        CHECK(log.turns_played == 30);
        CHECK(log.shots_fired == 19);
        CHECK(!log.aborted);
    }
}

TEST_CASE("no repair is logged after the disconnecting turn") {
    Graph g = er_graph(60, 0.08, 12);
    auto config = basic_config("B-V-H");
    config.shots_per_turn = 3;
    config.max_turns = 40;
    Rng rng(3);
    auto log = play_game(g, config, rng);
    REQUIRE(log.winner == Winner::Mallory);
    REQUIRE(!log.turns.empty());
    for (std::size_t i = 0; i + 1 < log.turns.size(); ++i) CHECK(log.turns[i].repair_ran);
    CHECK(!log.turns.back().repair_ran);
    CHECK(log.turns.back().turn == log.win_turn);
}

TEST_CASE("alice skips the pointless repair after the last turn") {
    Graph g = complete(12);
    auto config = basic_config("D-V-H");
    config.shots_per_turn = 1;
    config.max_turns = 4;
    Rng rng(8);
    auto log = play_game(g, config, rng);
    REQUIRE(log.winner == Winner::Alice);
    REQUIRE(log.turns.size() == 4);
    for (std::size_t i = 0; i + 1 < log.turns.size(); ++i) CHECK(log.turns[i].repair_ran);
    CHECK(!log.turns.back().repair_ran);
}

TEST_CASE("damage cannot shrink within an edge-attack turn") {
    Graph g = er_graph(70, 0.1, 21);
    auto config = basic_config("B-E-L");
    config.shots_per_turn = 8;
    config.max_turns = 12;
    Rng rng(4);
    auto log = play_game(g, config, rng);
    for (std::size_t i = 1; i < log.shots.size(); ++i) {
        if (log.shots[i].turn != log.shots[i - 1].turn) continue;
        CHECK(log.shots[i].damage_ratio <= log.shots[i - 1].damage_ratio + 1e-12);
    }
}

TEST_CASE("the largest component cannot grow within a vertex-attack turn") {
    Graph g = er_graph(70, 0.1, 22);
    auto config = basic_config("B-V-H");
    config.shots_per_turn = 6;
    config.max_turns = 12;
    Rng rng(4);
    auto log = play_game(g, config, rng);
    REQUIRE(!log.shots.empty());
    // recover |LCC| per shot: each vertex shot shrinks the alive count by one
    std::size_t turn_start_alive = 0;
    double prev_lcc = 0.0;
    for (const auto& s : log.shots) {
        if (s.shot == 1) {
            turn_start_alive = log.turns[s.turn - 1].start.n_alive;
            prev_lcc = static_cast<double>(turn_start_alive);
        }
        const double alive = static_cast<double>(turn_start_alive - s.shot);
        const double lcc = s.damage_ratio * alive;
        CHECK(lcc <= prev_lcc + 1e-6);
        prev_lcc = lcc;
    }
}

TEST_CASE("replaying a seed reproduces the log exactly") {
    auto run = [] {
        Graph g = er_graph(50, 0.12, 77);
        auto config = basic_config("C-V-H");
        config.shots_per_turn = 4;
        config.max_turns = 15;
        config.repair.reactivation_fraction = 0.4;
        Rng rng(9);
        return log_fingerprint(play_game(g, config, rng));
    };
    CHECK(run() == run());
}

TEST_CASE("subgraph damage tracks the observed ball") {
    // P5 under B-V-H deterministically removes the middle vertex; the
    // radius-1 ball around 0 is untouched even though the graph splits
    Graph g = path(5);
    auto config = basic_config("B-V-H");
    config.shots_per_turn = 1;
    config.observe_root = 0;
    config.observe_pl = 1;
    Rng rng(2);
    auto log = play_game(g, config, rng);
    REQUIRE(log.winner == Winner::Mallory);
    REQUIRE(log.shots.size() == 1);
    CHECK(log.shots[0].removed == ComponentRef::vertex(2));
    CHECK(log.shots[0].damage_ratio == doctest::Approx(0.5));
    CHECK(log.shots[0].subgraph_damage == doctest::Approx(1.0));
}

TEST_CASE("subgraph damage drops to zero when the root dies") {
    Graph g = star(4);
    auto config = basic_config("B-V-H");
    config.shots_per_turn = 1;
    config.observe_root = 0;
    Rng rng(2);
    auto log = play_game(g, config, rng);
    REQUIRE(log.shots.size() == 1);
    CHECK(log.shots[0].removed == ComponentRef::vertex(0));
    CHECK(log.shots[0].subgraph_damage == doctest::Approx(0.0));
}

TEST_CASE("radius zero watches only the root") {
    Graph g = path(5);
    auto config = basic_config("B-V-H");
    config.shots_per_turn = 1;
    config.observe_root = 0;
    config.observe_pl = 0;
    Rng rng(2);
    auto log = play_game(g, config, rng);
    REQUIRE(log.shots.size() == 1);
    CHECK(log.shots[0].subgraph_damage == doctest::Approx(1.0));

    Graph h = path(5);
    config.observe_root = 2;  // B-V-H removes this one
    Rng rng2(2);
    auto log2 = play_game(h, config, rng2);
    REQUIRE(log2.shots.size() == 1);
    CHECK(log2.shots[0].subgraph_damage == doctest::Approx(0.0));
}

TEST_CASE("the observed ball is re-induced after every shot") {
    // C6 watched from 0 at radius 2 starts as a 5-vertex ball; once vertex 5
    // goes, the re-induced ball is only {0, 1, 2}
    bool found = false;
    for (std::uint64_t seed = 0; seed < 100 && !found; ++seed) {
        Graph g = cycle(6);
        auto config = basic_config("D-V-H");
        config.shots_per_turn = 1;
        config.max_turns = 1;
        config.observe_root = 0;
        config.observe_pl = 2;
        Rng rng(seed);
        auto log = play_game(g, config, rng);
        REQUIRE(log.shots.size() == 1);
        if (log.shots[0].removed != ComponentRef::vertex(5)) continue;
        found = true;
        CHECK(log.shots[0].subgraph_damage == doctest::Approx(3.0 / 5.0));
        CHECK(log.winner == Winner::Alice);  // C6 minus one vertex stays connected
    }
    CHECK(found);
}

TEST_CASE("a broken repair policy aborts with a partial log") {
    Graph g = er_graph(30, 0.2, 5);
    auto config = basic_config("D-V-H");
    config.shots_per_turn = 2;
    config.repair.kind = RepairKind::Usw;  // no params supplied
    Rng rng(6);
    auto log = play_game(g, config, rng);
    CHECK(log.aborted);
    CHECK(!log.abort_reason.empty());
    CHECK(log.shots.size() == 2);  // mallory's first turn still happened
}

TEST_CASE("a disconnected start is rejected outright") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    auto config = basic_config("D-V-H");
    Rng rng(1);
    CHECK_THROWS_AS(play_game(g, config, rng), DisconnectedInput);
}

TEST_CASE("match of tree graphs falls to the first edge shot") {
    GeneratorConfig gen;
    gen.family = Family::PowerLaw;
    gen.n = 150;
    gen.m_attach = 1;
    auto config = basic_config("B-E-H");
    config.shots_per_turn = 10;
    auto summary = run_match(gen, config, 10, 33);
    CHECK(summary.repetitions == 10);
    CHECK(summary.mallory_wins == 10);
    CHECK(summary.alice_wins == 0);
    CHECK(summary.min_shots == 1);
    CHECK(summary.median_shots == doctest::Approx(1.0));
    CHECK(summary.max_shots == 1);
}

TEST_CASE("matches replay under the master seed") {
    GeneratorConfig gen;
    gen.family = Family::Random;
    gen.n = 50;
    gen.p = 0.12;
    auto config = basic_config("B-V-H");
    config.shots_per_turn = 5;
    config.max_turns = 20;
    auto a = run_match(gen, config, 5, 101);
    auto b = run_match(gen, config, 5, 101);
    CHECK(a.min_shots == b.min_shots);
    CHECK(a.median_shots == b.median_shots);
    CHECK(a.max_shots == b.max_shots);
    CHECK(a.mallory_wins == b.mallory_wins);
}

TEST_CASE("a match with a broken rep surfaces the error") {
    GeneratorConfig gen;
    gen.family = Family::Random;
    gen.n = 30;
    gen.p = 0.5;
    auto config = basic_config("D-V-H");
    config.shots_per_turn = 1;  // graph survives the turn, so alice must act
    config.repair.kind = RepairKind::Usw;  // missing params aborts every rep
    CHECK_THROWS_AS(run_match(gen, config, 3, 7), Error);
}
