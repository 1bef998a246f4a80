#include "uswsim/game.hpp"

#include <algorithm>

#include "uswsim/errors.hpp"

namespace uswsim {

namespace {

VertexId default_observe_root(const Graph& g) {
    VertexId best = 0;
    std::size_t best_deg = 0;
    bool found = false;
    for (VertexId v : g.alive_vertices()) {
        std::size_t d = g.degree(v);
        if (!found || d > best_deg) {
            best = v;
            best_deg = d;
            found = true;
        }
    }
    return best;  // lowest label wins ties by scan order
}

std::size_t ball_size(const Graph& g, VertexId root, std::uint32_t radius) {
    if (!g.is_alive(root)) return 0;
    auto dist = bfs_distances(g, root);
    std::size_t count = 0;
    for (VertexId v = 0; v < g.capacity(); ++v)
        if (dist[v] != kUnreachable && dist[v] <= radius) ++count;
    return count;
}

double light_damage_ratio(const Graph& g) {
    if (g.num_alive() == 0) return 0.0;
    return static_cast<double>(largest_component(g).size()) /
           static_cast<double>(g.num_alive());
}

}  // namespace

GameLog play_game(Graph& g, const GameConfig& config, Rng& rng) {
    if (config.shots_per_turn < 1) throw Error("play_game: shots_per_turn must be >= 1");
    if (config.max_turns < 1) throw Error("play_game: max_turns must be >= 1");
    if (!is_connected(g)) throw DisconnectedInput("play_game: starting graph is disconnected");

    const VertexId root = config.observe_root.value_or(default_observe_root(g));
    const double ball0 = static_cast<double>(ball_size(g, root, config.observe_pl));

    GameLog log;
    try {
        for (std::size_t turn = 1; turn <= config.max_turns; ++turn) {
            TurnRecord rec;
            rec.turn = turn;
            rec.start = take_snapshot(g);

            bool disconnected = false;
            if (config.attack_enabled) {
                for (std::size_t shot = 1; shot <= config.shots_per_turn; ++shot) {
                    if (config.profile.component == ComponentRef::Kind::Vertex &&
                        g.num_alive() <= 1)
                        break;  // one survivor: nothing left worth shooting
                    ShotRecord sr;
                    sr.turn = turn;
                    sr.shot = shot;
                    sr.removed = attack_shot(g, config.profile, rng, config.tol);
                    ++log.shots_fired;
                    sr.damage_ratio = light_damage_ratio(g);
                    sr.subgraph_damage =
                        ball0 > 0.0
                            ? static_cast<double>(ball_size(g, root, config.observe_pl)) / ball0
                            : 0.0;
                    log.shots.push_back(sr);
                    if (!is_connected(g)) {
                        // stop firing; the end-of-turn check below settles it
                        disconnected = true;
                        log.win_turn = turn;
                        log.win_shot = shot;
                        break;
                    }
                }
            }
            rec.end_attack = take_snapshot(g);

            if (disconnected) {
                rec.end_repair = rec.end_attack;
                log.turns.push_back(rec);
                log.turns_played = turn;
                log.winner = Winner::Mallory;
                return log;
            }

            // no repair after the last turn: the game is already over at
            // the disconnection check
            if (config.repair_enabled && turn < config.max_turns) {
                rec.repair = repair_turn(g, config.repair, rng);
                rec.repair_ran = true;
                rec.end_repair = take_snapshot(g);
            } else {
                rec.end_repair = rec.end_attack;
            }
            log.turns.push_back(rec);
            log.turns_played = turn;
        }
    } catch (const Error& e) {
        log.aborted = true;
        log.abort_reason = e.what();
    }
    return log;
}

MatchSummary run_match(const GeneratorConfig& gen, const GameConfig& game,
                       std::size_t repetitions, std::uint64_t master_seed) {
    MatchSummary summary;
    summary.family = gen.family;
    summary.profile = game.profile;
    summary.repetitions = repetitions;

    std::vector<std::size_t> shots;
    shots.reserve(repetitions);
    for (std::size_t rep = 0; rep < repetitions; ++rep) {
        GeneratorConfig gc = gen;
        gc.seed = derive_seed(master_seed, 2 * rep);
        Graph g = generate(gc);
        Rng game_rng(derive_seed(master_seed, 2 * rep + 1));
        GameLog log = play_game(g, game, game_rng);
        if (log.aborted) throw Error("match rep " + std::to_string(rep) + ": " + log.abort_reason);
        shots.push_back(log.shots_fired);
        if (log.winner == Winner::Mallory)
            ++summary.mallory_wins;
        else
            ++summary.alice_wins;
    }
    std::sort(shots.begin(), shots.end());
    if (!shots.empty()) {
        summary.min_shots = shots.front();
        summary.max_shots = shots.back();
        const std::size_t mid = shots.size() / 2;
        summary.median_shots = shots.size() % 2 == 1
                                   ? static_cast<double>(shots[mid])
                                   : (static_cast<double>(shots[mid - 1]) +
                                      static_cast<double>(shots[mid])) /
                                         2.0;
    }
    return summary;
}

}  // namespace uswsim
