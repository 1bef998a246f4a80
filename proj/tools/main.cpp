// uswsim: command line front end for the graph robustness toolkit.
// Subcommands: generate, metrics, attack, efficacy, game, match, plotdata.
// Exit codes: 0 ok, 1 usage, 2 generation failure, 3 I/O, 4 truncated or
// partial results.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "uswsim/attack.hpp"
#include "uswsim/errors.hpp"
#include "uswsim/game.hpp"
#include "uswsim/generators.hpp"
#include "uswsim/graph.hpp"
#include "uswsim/io.hpp"
#include "uswsim/metrics.hpp"
#include "uswsim/repair.hpp"
#include "uswsim/rng.hpp"

using namespace uswsim;
namespace fs = std::filesystem;

namespace {

constexpr const char* kVersion = USWSIM_TOOL_VERSION;

// ordered key=value pairs describing the effective config of a run; used
// for the header comments and the config hash
using KV = std::vector<std::pair<std::string, std::string>>;

std::string timestamp_utc() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string config_blob(const std::string& command, const KV& kv) {
    std::string blob = command;
    for (const auto& [k, v] : kv) {
        blob += '|';
        blob += k;
        blob += '=';
        blob += v;
    }
    return blob;
}

std::string hash_hex(const std::string& command, const KV& kv) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "0x%016llx",
                  static_cast<unsigned long long>(fnv1a64(config_blob(command, kv))));
    return buf;
}

// the '# timestamp:' line is the one comparison tools are expected to skip
void write_header(std::ostream& out, const std::string& command, const KV& kv) {
    out << "# uswsim " << kVersion << '\n';
    out << "# command: " << command << '\n';
    out << "# config:";
    for (const auto& [k, v] : kv) out << ' ' << k << '=' << v;
    out << '\n';
    out << "# config_hash: " << hash_hex(command, kv) << '\n';
    out << "# timestamp: " << timestamp_utc() << '\n';
}

std::string resolve(const std::string& dir, const std::string& name) {
    fs::path p(name);
    if (p.is_absolute() || dir.empty()) return name;
    return (fs::path(dir) / p).string();
}

void ensure_parent(const std::string& path) {
    const fs::path parent = fs::path(path).parent_path();
    if (parent.empty()) return;
    std::error_code ec;
    fs::create_directories(parent, ec);
    if (ec) throw Error("cannot create directory " + parent.string() + ": " + ec.message());
}

void refuse_overwrite(const std::string& path, bool force) {
    if (!force && fs::exists(path))
        throw Error("output exists: " + path + " (pass --force to overwrite)");
}

std::ofstream checked_out(const std::string& path, bool force) {
    refuse_overwrite(path, force);
    ensure_parent(path);
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    return out;
}

// tracks what a command wrote, for the run manifest
struct RunTracker {
    std::string command;
    KV config;
    std::vector<std::string> files;
    nlohmann::json extra;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    void write_manifest(const std::string& path, bool force) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        nlohmann::json j;
        j["tool"] = "uswsim";
        j["version"] = kVersion;
        j["command"] = command;
        j["config_hash"] = hash_hex(command, config);
        nlohmann::json cfg = nlohmann::json::object();
        for (const auto& [k, v] : config) cfg[k] = v;
        j["config"] = cfg;
        j["outputs"] = files;
        j["timings_ms"] = {{"total", ms}};
        for (auto& [k, v] : extra.items()) j[k] = v;
        auto out = checked_out(path, force);
        out << j.dump(2) << '\n';
    }
};

constexpr const char* kSnapshotCols =
    "n,m,lcc,aipl,apl,clustering,density,diameter,damage_ratio,efficiency";

std::string snapshot_row(const MetricsSnapshot& s) {
    std::ostringstream o;
    o << s.n_alive << ',' << s.m_alive << ',' << s.lcc_size << ','
      << format_double(s.avg_inverse_path_length) << ',' << format_double(s.avg_path_length)
      << ',' << format_double(s.clustering) << ',' << format_double(s.density) << ','
      << s.diameter << ',' << format_double(s.damage_ratio) << ','
      << format_double(s.global_efficiency);
    return o.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<AttackProfile> parse_profile_list(const std::string& spec) {
    if (spec == "all") return all_profiles();
    std::vector<AttackProfile> out;
    for (const auto& tok : split(spec, ',')) out.push_back(AttackProfile::parse(tok));
    return out;
}

std::vector<Family> parse_family_list(const std::string& spec) {
    if (spec == "all")
        return {Family::Random, Family::PowerLaw, Family::SmallWorld, Family::Usw};
    std::vector<Family> out;
    for (const auto& tok : split(spec, ',')) out.push_back(parse_family(tok));
    return out;
}

std::string fmt(double x) { return format_double(x); }
std::string fmt(std::size_t x) { return std::to_string(x); }

// minimal reader for our own CSV files (no quoting ever emitted)
struct Table {
    std::vector<std::string> cols;
    std::vector<std::vector<std::string>> rows;

    std::size_t col(const std::string& name) const {
        for (std::size_t i = 0; i < cols.size(); ++i)
            if (cols[i] == name) return i;
        throw Error("missing column '" + name + "' in CSV");
    }
};

Table read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    Table t;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto cells = split(line, ',');
        if (t.cols.empty())
            t.cols = cells;
        else
            t.rows.push_back(cells);
    }
    if (t.cols.empty()) throw Error("no header row in " + path);
    return t;
}

// ---------------------------------------------------------------- generate

struct GenerateOpts {
    std::string family;
    std::size_t n = 0;
    std::uint64_t seed = 1;
    double p = 0.01;
    std::size_t m_attach = 1;
    std::size_t k = 4;
    double beta = 0.95, gamma = 0.95, t = 0.10;
    std::size_t l_repair = 10;
    double alpha = 0.0;
    bool have_alpha = false;
    std::size_t max_retries = 100;
    std::string out;
    std::string output_dir = ".";
    bool force = false;
};

GeneratorConfig to_generator_config(const GenerateOpts& o) {
    GeneratorConfig gc;
    gc.family = parse_family(o.family);
    gc.n = o.n;
    gc.seed = o.seed;
    gc.p = o.p;
    gc.m_attach = o.m_attach;
    gc.k = o.k;
    gc.usw.beta = o.beta;
    gc.usw.gamma = o.gamma;
    gc.usw.t = o.t;
    gc.usw.l_repair = o.l_repair;
    if (o.have_alpha) gc.usw.alpha = o.alpha;
    gc.max_retries = o.max_retries;
    return gc;
}

KV generator_kv(const GeneratorConfig& gc) {
    KV kv{{"family", family_token(gc.family)}, {"n", fmt(gc.n)}, {"seed", fmt(gc.seed)}};
    switch (gc.family) {
        case Family::Random: kv.emplace_back("p", fmt(gc.p)); break;
        case Family::PowerLaw: kv.emplace_back("m", fmt(gc.m_attach)); break;
        case Family::SmallWorld:
            kv.emplace_back("k", fmt(gc.k));
            kv.emplace_back("p", fmt(gc.p));
            break;
        case Family::Usw:
            kv.emplace_back("beta", fmt(gc.usw.beta));
            kv.emplace_back("gamma", fmt(gc.usw.gamma));
            kv.emplace_back("t", fmt(gc.usw.t));
            kv.emplace_back("L", fmt(gc.usw.l_repair));
            if (gc.usw.alpha) kv.emplace_back("alpha", fmt(*gc.usw.alpha));
            break;
    }
    return kv;
}

int cmd_generate(const GenerateOpts& o) {
    GeneratorConfig gc = to_generator_config(o);
    Graph g = generate(gc);

    std::string name = o.out;
    if (name.empty())
        name = std::string(family_token(gc.family)) + "_n" + std::to_string(gc.n) + "_s" +
               std::to_string(gc.seed) + ".edges";
    const std::string path = resolve(o.output_dir, name);
    refuse_overwrite(path, o.force);
    refuse_overwrite(meta_path_for(path), o.force);
    ensure_parent(path);
    save_graph(g, path);
    save_meta(gc, path);
    std::cout << "wrote " << path << " (n=" << g.num_alive() << ", m=" << g.num_edges() << ")\n";
    std::cout << "wrote " << meta_path_for(path) << '\n';
    return 0;
}

// ----------------------------------------------------------------- metrics

struct MetricsOpts {
    std::string graph;
    std::string out;
    std::string output_dir = ".";
    bool force = false;
};

int cmd_metrics(const MetricsOpts& o) {
    Graph g = load_graph(o.graph);
    const MetricsSnapshot s = take_snapshot(g);
    KV kv{{"graph", o.graph}};
    auto emit = [&](std::ostream& out) {
        write_header(out, "metrics", kv);
        out << kSnapshotCols << '\n' << snapshot_row(s) << '\n';
    };
    if (o.out.empty()) {
        emit(std::cout);
    } else {
        auto out = checked_out(resolve(o.output_dir, o.out), o.force);
        emit(out);
    }
    return 0;
}

// ------------------------------------------------------------------ attack

struct AttackOpts {
    std::string graph;
    std::string profile;
    std::size_t shots = 0;  // 0 = until disconnection or exhaustion
    std::uint64_t seed = 1;
    std::string out;
    std::string output_dir = ".";
    bool force = false;
};

int cmd_attack(const AttackOpts& o) {
    Graph g = load_graph(o.graph);
    const AttackProfile profile = AttackProfile::parse(o.profile);
    Rng rng(o.seed);
    KV kv{{"graph", o.graph},
          {"profile", profile.token()},
          {"shots", fmt(o.shots)},
          {"seed", fmt(o.seed)}};

    std::ostringstream body;
    body << "shot,removed,damage_ratio,connected\n";
    bool disconnected = !is_connected(g);
    std::size_t shot = 0;
    while (!disconnected) {
        if (o.shots > 0 && shot >= o.shots) break;
        const bool vertex_kind = profile.component == ComponentRef::Kind::Vertex;
        if (vertex_kind && g.num_alive() <= 1) break;   // nothing left to shoot
        if (!vertex_kind && g.num_edges() == 0) break;  // single vertex, no edges
        ComponentRef removed = attack_shot(g, profile, rng);
        ++shot;
        disconnected = !is_connected(g);
        body << shot << ',' << removed.str() << ',' << fmt(damage_ratio(g)) << ','
             << (disconnected ? 0 : 1) << '\n';
    }
    body << "# disconnected: " << (disconnected ? 1 : 0) << '\n';

    RunTracker tracker;
    tracker.command = "attack";
    tracker.config = kv;
    tracker.extra["disconnected"] = disconnected;
    tracker.extra["shots_fired"] = shot;
    if (o.out.empty()) {
        write_header(std::cout, "attack", kv);
        std::cout << body.str();
    } else {
        const std::string path = resolve(o.output_dir, o.out);
        auto out = checked_out(path, o.force);
        write_header(out, "attack", kv);
        out << body.str();
        tracker.files.push_back(path);
        tracker.write_manifest(path + ".manifest.json", o.force);
    }
    return disconnected ? 0 : 4;
}

// ---------------------------------------------------------------- efficacy

struct EfficacyOpts {
    std::string graph;
    std::string profiles = "all";
    std::size_t max_unique = 500000;
    std::size_t max_depth = 0;
    std::string out;
    std::string output_dir = ".";
    bool force = false;
};

int cmd_efficacy(const EfficacyOpts& o) {
    Graph g = load_graph(o.graph);
    const auto profiles = parse_profile_list(o.profiles);
    EfficacyLimits limits;
    limits.max_unique_graphs = o.max_unique;
    limits.max_depth = o.max_depth;
    KV kv{{"graph", o.graph},
          {"profiles", o.profiles},
          {"max_unique", fmt(o.max_unique)},
          {"max_depth", fmt(o.max_depth)}};

    std::ostringstream body;
    body << "profile,unique_graphs,min_depth,max_depth,mean_depth,stddev_depth,truncated,"
            "states_seen\n";
    bool any_truncated = false;
    for (const auto& profile : profiles) {
        const EfficacyStats st = recursive_efficacy(g, profile, limits);
        any_truncated = any_truncated || st.truncated;
        body << profile.token() << ',' << st.unique_graphs << ',' << st.min_depth << ','
             << st.max_depth << ',' << fmt(st.mean_depth) << ',' << fmt(st.stddev_depth) << ','
             << (st.truncated ? 1 : 0) << ',' << st.states_seen << '\n';
    }

    RunTracker tracker;
    tracker.command = "efficacy";
    tracker.config = kv;
    tracker.extra["truncated"] = any_truncated;
    if (o.out.empty()) {
        write_header(std::cout, "efficacy", kv);
        std::cout << body.str();
    } else {
        const std::string path = resolve(o.output_dir, o.out);
        auto out = checked_out(path, o.force);
        write_header(out, "efficacy", kv);
        out << body.str();
        tracker.files.push_back(path);
        tracker.write_manifest(path + ".manifest.json", o.force);
    }
    if (any_truncated) std::cerr << "efficacy: results truncated by limits\n";
    return any_truncated ? 4 : 0;
}

// -------------------------------------------------------------------- game

struct GameOpts {
    std::string graph;
    std::string profile;
    std::size_t turns = 10;
    std::size_t shots = 100;
    std::uint64_t seed = 1;
    std::string repair = "standard";  // standard | usw | off
    double fraction = 0.10;
    double success = 0.90;
    double beta = 0.95, gamma = 0.95, t = 0.10;
    std::size_t l_repair = 10;
    bool have_beta = false, have_gamma = false, have_t = false, have_l = false;
    std::int64_t observe_root = -1;  // -1 = auto (highest degree)
    std::uint32_t observe_pl = 2;
    std::string name;
    std::string output_dir = ".";
    bool force = false;
};

KV game_kv(const GameOpts& o, const GameConfig& config) {
    KV kv{{"graph", o.graph},       {"profile", config.profile.token()},
          {"turns", fmt(o.turns)},  {"shots", fmt(o.shots)},
          {"seed", fmt(o.seed)},    {"repair", o.repair},
          {"observe_pl", fmt(static_cast<std::size_t>(o.observe_pl))}};
    if (o.repair == "standard") {
        kv.emplace_back("fraction", fmt(o.fraction));
        kv.emplace_back("success", fmt(o.success));
    } else if (o.repair == "usw" && config.repair.usw) {
        kv.emplace_back("beta", fmt(config.repair.usw->beta));
        kv.emplace_back("gamma", fmt(config.repair.usw->gamma));
        kv.emplace_back("t", fmt(config.repair.usw->t));
        kv.emplace_back("L", fmt(config.repair.usw->l_repair));
    }
    if (o.observe_root >= 0) kv.emplace_back("observe_root", fmt(std::size_t(o.observe_root)));
    return kv;
}

GameConfig to_game_config(const GameOpts& o, const std::string& graph_path) {
    GameConfig config;
    config.profile = AttackProfile::parse(o.profile);
    config.shots_per_turn = o.shots;
    config.max_turns = o.turns;
    config.repair.reactivation_fraction = o.fraction;
    config.repair.attempt_success_prob = o.success;
    if (o.repair == "off") {
        config.repair_enabled = false;
    } else if (o.repair == "standard") {
        config.repair.kind = RepairKind::Standard;
    } else if (o.repair == "usw") {
        config.repair.kind = RepairKind::Usw;
        // parameter precedence: explicit flags > graph sidecar > defaults
        UswParams params;
        if (auto meta = load_meta(graph_path); meta && meta->family == Family::Usw)
            params = meta->usw;
        if (o.have_beta) params.beta = o.beta;
        if (o.have_gamma) params.gamma = o.gamma;
        if (o.have_t) params.t = o.t;
        if (o.have_l) params.l_repair = o.l_repair;
        config.repair.usw = params;
    } else {
        throw DomainError("unknown repair policy '" + o.repair + "'");
    }
    if (o.observe_root >= 0) config.observe_root = static_cast<VertexId>(o.observe_root);
    config.observe_pl = o.observe_pl;
    return config;
}

void write_shots_csv(std::ostream& out, const GameLog& log, const KV& kv) {
    write_header(out, "game", kv);
    out << "turn,shot,removed,damage_ratio,subgraph_damage\n";
    for (const auto& s : log.shots)
        out << s.turn << ',' << s.shot << ',' << s.removed.str() << ',' << fmt(s.damage_ratio)
            << ',' << fmt(s.subgraph_damage) << '\n';
}

void write_turns_csv(std::ostream& out, const GameLog& log, const KV& kv) {
    write_header(out, "game", kv);
    out << "turn";
    for (const char* prefix : {"start_", "attack_", "repair_"})
        for (const char* col :
             {"n", "m", "lcc", "aipl", "apl", "clustering", "density", "diameter",
              "damage_ratio", "efficiency"})
            out << ',' << prefix << col;
    out << ",repair_ran,vertices_restored,edges_attempted,edges_restored\n";
    for (const auto& t : log.turns) {
        out << t.turn;
        for (const auto* m : {&t.start, &t.end_attack, &t.end_repair}) out << ',' << snapshot_row(*m);
        out << ',' << (t.repair_ran ? 1 : 0) << ',' << t.repair.vertices_restored << ','
            << t.repair.edges_attempted << ',' << t.repair.edges_restored << '\n';
    }
}

int cmd_game(const GameOpts& o) {
    Graph g = load_graph(o.graph);
    const GameConfig config = to_game_config(o, o.graph);
    const KV kv = game_kv(o, config);

    std::string name = o.name;
    if (name.empty())
        name = "game_" + config.profile.token() + "_s" + std::to_string(o.seed);
    const fs::path dir = fs::path(resolve(o.output_dir, name));
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error("cannot create run dir " + dir.string() + ": " + ec.message());

    const std::string shots_path = (dir / "shots.csv").string();
    const std::string turns_path = (dir / "turns.csv").string();
    const std::string manifest_path = (dir / "manifest.json").string();
    refuse_overwrite(shots_path, o.force);
    refuse_overwrite(turns_path, o.force);
    refuse_overwrite(manifest_path, o.force);

    RunTracker tracker;
    tracker.command = "game";
    tracker.config = kv;

    Rng rng(o.seed);
    const GameLog log = play_game(g, config, rng);

    {
        auto out = checked_out(shots_path, true);
        write_shots_csv(out, log, kv);
    }
    {
        auto out = checked_out(turns_path, true);
        write_turns_csv(out, log, kv);
    }
    tracker.files = {shots_path, turns_path};
    tracker.extra["game"] = {
        {"winner", log.winner == Winner::Mallory ? "mallory" : "alice"},
        {"turns_played", log.turns_played},
        {"shots_fired", log.shots_fired},
        {"win_turn", log.win_turn},
        {"win_shot", log.win_shot},
        {"aborted", log.aborted},
        {"abort_reason", log.abort_reason},
    };
    tracker.write_manifest(manifest_path, true);

    std::cout << "winner=" << (log.winner == Winner::Mallory ? "mallory" : "alice")
              << " turns=" << log.turns_played << " shots=" << log.shots_fired << " dir="
              << dir.string() << '\n';
    if (log.aborted) {
        std::cerr << "game aborted: " << log.abort_reason << '\n';
        return 4;
    }
    return 0;
}

// ------------------------------------------------------------------- match

struct MatchOpts {
    std::string families = "all";
    std::string profiles = "all";
    std::size_t reps = 10;
    std::size_t n = 1000;
    std::uint64_t seed = 1;
    double p = 0.01;
    std::size_t m_attach = 1;
    std::size_t k = 10;
    double beta = 0.95, gamma = 0.95, t = 0.10;
    std::size_t l_repair = 10;
    std::size_t turns = 10;
    std::size_t shots = 100;
    std::string repair = "off";
    double fraction = 0.10;
    double success = 0.90;
    std::string out = "match.csv";
    std::string output_dir = ".";
    bool force = false;
};

int cmd_match(const MatchOpts& o) {
    const auto families = parse_family_list(o.families);
    const auto profiles = parse_profile_list(o.profiles);
    KV kv{{"families", o.families}, {"profiles", o.profiles}, {"reps", fmt(o.reps)},
          {"n", fmt(o.n)},          {"seed", fmt(o.seed)},    {"p", fmt(o.p)},
          {"m", fmt(o.m_attach)},   {"k", fmt(o.k)},          {"beta", fmt(o.beta)},
          {"gamma", fmt(o.gamma)},  {"t", fmt(o.t)},          {"L", fmt(o.l_repair)},
          {"turns", fmt(o.turns)},  {"shots", fmt(o.shots)},  {"repair", o.repair}};

    std::cerr << "match: " << families.size() << " families x " << profiles.size()
              << " profiles x " << o.reps << " reps = " << families.size() * profiles.size() * o.reps
              << " games\n";

    GameConfig game;
    game.shots_per_turn = o.shots;
    game.max_turns = o.turns;
    if (o.repair == "off") {
        game.repair_enabled = false;
    } else if (o.repair == "standard") {
        game.repair.kind = RepairKind::Standard;
        game.repair.reactivation_fraction = o.fraction;
        game.repair.attempt_success_prob = o.success;
    } else if (o.repair == "usw") {
        game.repair.kind = RepairKind::Usw;
        UswParams params;
        params.beta = o.beta;
        params.gamma = o.gamma;
        params.t = o.t;
        params.l_repair = o.l_repair;
        game.repair.usw = params;
    } else {
        throw DomainError("unknown repair policy '" + o.repair + "'");
    }

    std::ostringstream body;
    body << "family,profile,reps,mallory_wins,alice_wins,min_shots,median_shots,max_shots\n";
    nlohmann::json cells = nlohmann::json::array();
    std::size_t cell = 0;
    for (Family family : families) {
        GeneratorConfig gen;
        gen.family = family;
        gen.n = o.n;
        gen.p = o.p;
        gen.m_attach = o.m_attach;
        gen.k = o.k;
        gen.usw.beta = o.beta;
        gen.usw.gamma = o.gamma;
        gen.usw.t = o.t;
        gen.usw.l_repair = o.l_repair;
        for (const auto& profile : profiles) {
            game.profile = profile;
            const std::uint64_t cell_seed = derive_seed(o.seed, cell++);
            const MatchSummary s = run_match(gen, game, o.reps, cell_seed);
            body << family_token(family) << ',' << profile.token() << ',' << s.repetitions << ','
                 << s.mallory_wins << ',' << s.alice_wins << ',' << s.min_shots << ','
                 << fmt(s.median_shots) << ',' << s.max_shots << '\n';
            cells.push_back({{"family", family_token(family)},
                             {"profile", profile.token()},
                             {"cell_seed", cell_seed}});
            std::cerr << "  " << family_token(family) << ' ' << profile.token()
                      << ": median=" << fmt(s.median_shots) << " mallory=" << s.mallory_wins
                      << "/" << s.repetitions << '\n';
        }
    }

    RunTracker tracker;
    tracker.command = "match";
    tracker.config = kv;
    tracker.extra["cells"] = cells;
    tracker.extra["seed_scheme"] =
        "cell_seed = derive(master, cell); rep i: generate derive(cell_seed, 2i), game "
        "derive(cell_seed, 2i+1)";
    if (o.out.empty()) {
        write_header(std::cout, "match", kv);
        std::cout << body.str();
    } else {
        const std::string path = resolve(o.output_dir, o.out);
        auto out = checked_out(path, o.force);
        write_header(out, "match", kv);
        out << body.str();
        tracker.files.push_back(path);
        tracker.write_manifest(path + ".manifest.json", o.force);
    }
    return 0;
}

// ---------------------------------------------------------------- plotdata

struct PlotOpts {
    std::string run;
    std::string out = "plot.csv";
    bool force = false;
};

int cmd_plotdata(const PlotOpts& o) {
    const fs::path dir(o.run);
    const std::string shots_path = (dir / "shots.csv").string();
    const std::string turns_path = (dir / "turns.csv").string();
    if (!fs::exists(turns_path) || !fs::exists(shots_path))
        throw Error("not a completed run dir (missing shots.csv/turns.csv): " + o.run);

    const Table turns = read_csv(turns_path);
    const Table shots = read_csv(shots_path);
    const std::size_t c_turn = turns.col("turn");
    const std::size_t c_start = turns.col("start_damage_ratio");
    const std::size_t c_end = turns.col("repair_damage_ratio");
    const std::size_t c_sub = shots.col("subgraph_damage");

    KV kv{{"run", o.run}};
    std::ostringstream body;
    body << "series,x,y\n";
    for (const auto& row : turns.rows)
        body << "start_damage," << row[c_turn] << ',' << row[c_start] << '\n';
    for (const auto& row : turns.rows)
        body << "end_damage," << row[c_turn] << ',' << row[c_end] << '\n';
    std::size_t shot_index = 0;
    for (const auto& row : shots.rows)
        body << "subgraph_damage," << ++shot_index << ',' << row[c_sub] << '\n';

    const std::string path = resolve(dir.string(), o.out);
    auto out = checked_out(path, o.force);
    write_header(out, "plotdata", kv);
    out << body.str();
    std::cout << "wrote " << path << '\n';
    return 0;
}

// -------------------------------------------------------------------- main

int run(int argc, char** argv) {
    CLI::App app{"graph robustness simulation toolkit"};
    app.set_version_flag("--version", std::string("uswsim ") + kVersion);
    app.set_config("--config", "", "read option defaults from an INI file (one section per subcommand)");
    app.require_subcommand(1);
    // a configurable subcommand fires once per trigger (command line and
    // config file section); run the command only once
    int rc = 0;
    bool dispatched = false;
    auto once = [&](auto&& fn) {
        if (dispatched) return;
        dispatched = true;
        rc = fn();
    };

    GenerateOpts gen;
    auto* g = app.add_subcommand("generate", "build a graph and write edge list + sidecar");
    g->configurable();
    g->add_option("--family", gen.family, "er | pl | ws | usw")->required();
    g->add_option("--n", gen.n, "vertex count")->required()->check(CLI::PositiveNumber);
    g->add_option("--seed", gen.seed, "generation seed");
    g->add_option("-p,--p", gen.p, "ER edge probability / WS rewire probability");
    g->add_option("-m,--m", gen.m_attach, "BA edges per new vertex");
    g->add_option("-k,--k", gen.k, "WS ring neighbors (even)");
    g->add_option("--beta", gen.beta, "USW edge threshold");
    g->add_option("--gamma", gen.gamma, "USW failed-list reuse fraction");
    g->add_option("-t,--pool-fraction", gen.t, "USW repair pool fraction");
    g->add_option("-L,--l-repair", gen.l_repair, "USW nodes activated per repair turn");
    auto* alpha_opt = g->add_option("--alpha", gen.alpha, "optional USW preference exponent");
    g->add_option("--max-retries", gen.max_retries, "connectivity retry budget");
    g->add_option("-o,--out", gen.out, "output file (default <family>_n<n>_s<seed>.edges)");
    g->add_option("--output-dir", gen.output_dir, "directory for outputs")
        ->envname("USWSIM_OUTPUT_DIR");
    g->add_flag("--force", gen.force, "overwrite existing outputs");
    g->callback([&] {
        once([&] {
            gen.have_alpha = alpha_opt->count() > 0;
            return cmd_generate(gen);
        });
    });

    MetricsOpts met;
    auto* me = app.add_subcommand("metrics", "one snapshot row for a graph file");
    me->configurable();
    me->add_option("--graph", met.graph, "edge-list file")->required();
    me->add_option("-o,--out", met.out, "output CSV (default stdout)");
    me->add_option("--output-dir", met.output_dir, "directory for outputs")
        ->envname("USWSIM_OUTPUT_DIR");
    me->add_flag("--force", met.force, "overwrite existing outputs");
    me->callback([&] { once([&] { return cmd_metrics(met); }); });

    AttackOpts atk;
    auto* a = app.add_subcommand("attack", "fire a profile at a graph until it disconnects");
    a->configurable();
    a->add_option("--graph", atk.graph, "edge-list file")->required();
    a->add_option("--profile", atk.profile, "attack profile token, e.g. B-V-H")->required();
    a->add_option("--shots", atk.shots, "shot limit (0 = unlimited)");
    a->add_option("--seed", atk.seed, "tie-break seed");
    a->add_option("-o,--out", atk.out, "output CSV (default stdout)");
    a->add_option("--output-dir", atk.output_dir, "directory for outputs")
        ->envname("USWSIM_OUTPUT_DIR");
    a->add_flag("--force", atk.force, "overwrite existing outputs");
    a->callback([&] { once([&] { return cmd_attack(atk); }); });

    EfficacyOpts eff;
    auto* e = app.add_subcommand("efficacy", "recursive attack efficacy per profile");
    e->configurable();
    e->add_option("--graph", eff.graph, "edge-list file")->required();
    e->add_option("--profiles", eff.profiles, "comma list of tokens or 'all'");
    e->add_option("--max-unique", eff.max_unique, "unique end-state budget");
    e->add_option("--max-depth", eff.max_depth, "per-path removal budget (0 = natural bound)");
    e->add_option("-o,--out", eff.out, "output CSV (default stdout)");
    e->add_option("--output-dir", eff.output_dir, "directory for outputs")
        ->envname("USWSIM_OUTPUT_DIR");
    e->add_flag("--force", eff.force, "overwrite existing outputs");
    e->callback([&] { once([&] { return cmd_efficacy(eff); }); });

    GameOpts gm;
    auto* ga = app.add_subcommand("game", "play one attack/repair game and log it");
    ga->configurable();
    ga->add_option("--graph", gm.graph, "edge-list file")->required();
    ga->add_option("--profile", gm.profile, "attack profile token")->required();
    ga->add_option("--turns", gm.turns, "turn limit")->check(CLI::PositiveNumber);
    ga->add_option("--shots", gm.shots, "shots per turn")->check(CLI::PositiveNumber);
    ga->add_option("--seed", gm.seed, "game seed");
    ga->add_option("--repair", gm.repair, "standard | usw | off");
    ga->add_option("--fraction", gm.fraction, "standard repair reactivation fraction");
    ga->add_option("--success", gm.success, "standard repair edge attempt success probability");
    auto* gb = ga->add_option("--beta", gm.beta, "usw repair threshold (default: graph sidecar)");
    auto* gg = ga->add_option("--gamma", gm.gamma, "usw repair reuse fraction");
    auto* gt = ga->add_option("-t,--pool-fraction", gm.t, "usw repair pool fraction");
    auto* gl = ga->add_option("-L,--l-repair", gm.l_repair, "usw nodes activated per turn");
    ga->add_option("--observe-root", gm.observe_root, "subgraph damage root (-1 = highest degree)");
    ga->add_option("--observe-pl", gm.observe_pl, "subgraph damage radius");
    ga->add_option("--name", gm.name, "run dir name (default game_<profile>_s<seed>)");
    ga->add_option("--output-dir", gm.output_dir, "directory for run dirs")
        ->envname("USWSIM_OUTPUT_DIR");
    ga->add_flag("--force", gm.force, "overwrite an existing run dir");
    ga->callback([&] {
        once([&] {
            gm.have_beta = gb->count() > 0;
            gm.have_gamma = gg->count() > 0;
            gm.have_t = gt->count() > 0;
            gm.have_l = gl->count() > 0;
            return cmd_game(gm);
        });
    });

    MatchOpts mt;
    auto* m = app.add_subcommand("match", "families x profiles x reps summary table");
    m->configurable();
    m->add_option("--families", mt.families, "comma list of er,pl,ws,usw or 'all'");
    m->add_option("--profiles", mt.profiles, "comma list of tokens or 'all'");
    m->add_option("--reps", mt.reps, "games per cell")->check(CLI::PositiveNumber);
    m->add_option("--n", mt.n, "graph size")->check(CLI::PositiveNumber);
    m->add_option("--seed", mt.seed, "master seed");
    m->add_option("-p,--p", mt.p, "ER/WS probability");
    m->add_option("-m,--m", mt.m_attach, "BA edges per new vertex");
    m->add_option("-k,--k", mt.k, "WS ring neighbors");
    m->add_option("--beta", mt.beta, "USW beta");
    m->add_option("--gamma", mt.gamma, "USW gamma");
    m->add_option("-t,--pool-fraction", mt.t, "USW pool fraction");
    m->add_option("-L,--l-repair", mt.l_repair, "USW nodes per repair turn");
    m->add_option("--turns", mt.turns, "turn limit per game");
    m->add_option("--shots", mt.shots, "shots per turn");
    m->add_option("--repair", mt.repair, "off | standard | usw (default off)");
    m->add_option("--fraction", mt.fraction, "standard repair reactivation fraction");
    m->add_option("--success", mt.success, "standard repair success probability");
    m->add_option("-o,--out", mt.out, "summary CSV name");
    m->add_option("--output-dir", mt.output_dir, "directory for outputs")
        ->envname("USWSIM_OUTPUT_DIR");
    m->add_flag("--force", mt.force, "overwrite existing outputs");
    m->callback([&] { once([&] { return cmd_match(mt); }); });

    PlotOpts pl;
    auto* p = app.add_subcommand("plotdata", "tidy series CSV from a finished game run dir");
    p->configurable();
    p->add_option("--run", pl.run, "game run directory")->required();
    p->add_option("-o,--out", pl.out, "output CSV name (relative to run dir)");
    p->add_flag("--force", pl.force, "overwrite existing outputs");
    p->callback([&] { once([&] { return cmd_plotdata(pl); }); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : 1;  // 0 for --help/--version, 1 for usage errors
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InvalidProfile& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const MissingUswParams& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const RetryExhausted& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
