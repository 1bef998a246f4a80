#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uswsim/attack.hpp"
#include "uswsim/generators.hpp"
#include "uswsim/metrics.hpp"
#include "uswsim/repair.hpp"

namespace uswsim {

struct GameConfig {
    AttackProfile profile;
    std::size_t shots_per_turn = 100;
    std::size_t max_turns = 10;
    bool attack_enabled = true;
    bool repair_enabled = true;
    RepairPolicy repair;
    // Root of the observed induced subgraph for per-shot damage tracking.
    // Unset = highest-degree vertex of the starting graph (lowest label on
    // ties).
    std::optional<VertexId> observe_root;
    std::uint32_t observe_pl = 2;
    double tol = 1e-9;
};

enum class Winner { Mallory, Alice };

struct ShotRecord {
    std::size_t turn = 0;  // 1-based
    std::size_t shot = 0;  // 1-based within the turn
    ComponentRef removed;
    double damage_ratio = 0.0;
    // |radius-pl ball around observe_root now| / |same ball at game start|,
    // re-induced after every shot; 0 once the root is gone.
    double subgraph_damage = 0.0;
};

struct TurnRecord {
    std::size_t turn = 0;
    MetricsSnapshot start;
    MetricsSnapshot end_attack;
    MetricsSnapshot end_repair;  // == end_attack when no repair ran
    RepairReport repair;
    bool repair_ran = false;
};

struct GameLog {
    Winner winner = Winner::Alice;
    std::size_t turns_played = 0;
    std::size_t shots_fired = 0;
    // Set when Mallory wins: the shot that disconnected the graph.
    std::size_t win_turn = 0;
    std::size_t win_shot = 0;
    std::vector<ShotRecord> shots;
    std::vector<TurnRecord> turns;
    bool aborted = false;      // an error cut the game short
    std::string abort_reason;
};

// Plays the alternating game: Mallory fires up to shots_per_turn shots
// (stopping within the turn once the graph disconnects), the
// disconnection test runs at the end of his turn, and only if the graph
// survives does Alice repair. Ends on disconnection or after max_turns.
// Deterministic given the rng seed. Mutates g.
GameLog play_game(Graph& g, const GameConfig& config, Rng& rng);

// Table-2-shaped harness: `repetitions` independent games, each on a
// freshly generated graph. Rep i derives its generation seed from
// (master_seed, 2i) and its game seed from (master_seed, 2i+1).
struct MatchSummary {
    Family family = Family::Random;
    AttackProfile profile;
    std::size_t repetitions = 0;
    std::size_t mallory_wins = 0;
    std::size_t alice_wins = 0;
    // Over shots fired per rep: shots to disconnection when Mallory won,
    // total shots fired when Alice held out.
    std::size_t min_shots = 0;
    double median_shots = 0.0;
    std::size_t max_shots = 0;
};

MatchSummary run_match(const GeneratorConfig& gen, const GameConfig& game,
                       std::size_t repetitions, std::uint64_t master_seed);

}  // namespace uswsim
