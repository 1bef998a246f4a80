#include "uswsim/attack.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "uswsim/errors.hpp"

namespace uswsim {

namespace {

char measure_letter(CentralityKind k) {
    switch (k) {
        case CentralityKind::Degree: return 'D';
        case CentralityKind::BetweennessVertex:
        case CentralityKind::BetweennessEdge: return 'B';
        case CentralityKind::Closeness: return 'C';
    }
    return '?';
}

}  // namespace

std::string AttackProfile::token() const {
    std::string t = "x-x-x";
    t[0] = measure_letter(measure);
    t[2] = component == ComponentRef::Kind::Edge ? 'E' : 'V';
    t[4] = extremal == Extremal::High ? 'H' : 'L';
    return t;
}

AttackProfile AttackProfile::parse(std::string_view s) {
    if (s.size() != 5 || s[1] != '-' || s[3] != '-')
        throw InvalidProfile("bad profile token '" + std::string(s) + "', expected like B-V-H");
    AttackProfile p;
    switch (s[2]) {
        case 'V': p.component = ComponentRef::Kind::Vertex; break;
        case 'E': p.component = ComponentRef::Kind::Edge; break;
        default: throw InvalidProfile("bad component in '" + std::string(s) + "', expected V or E");
    }
    switch (s[0]) {
        case 'D': p.measure = CentralityKind::Degree; break;
        case 'C': p.measure = CentralityKind::Closeness; break;
        case 'B':
            p.measure = p.component == ComponentRef::Kind::Edge
                            ? CentralityKind::BetweennessEdge
                            : CentralityKind::BetweennessVertex;
            break;
        default: throw InvalidProfile("bad measure in '" + std::string(s) + "', expected D, B or C");
    }
    switch (s[4]) {
        case 'H': p.extremal = Extremal::High; break;
        case 'L': p.extremal = Extremal::Low; break;
        default: throw InvalidProfile("bad extremal in '" + std::string(s) + "', expected H or L");
    }
    if (p.component == ComponentRef::Kind::Edge && s[0] != 'B')
        throw InvalidProfile("profile '" + std::string(s) +
                             "': only betweenness has an edge variant");
    return p;
}

std::vector<AttackProfile> all_profiles() {
    std::vector<AttackProfile> out;
    for (const char* t : {"D-V-H", "D-V-L", "B-V-H", "B-V-L", "B-E-H", "B-E-L", "C-V-H", "C-V-L"})
        out.push_back(AttackProfile::parse(t));
    return out;
}

std::vector<ComponentRef> candidate_set(const Graph& g, const AttackProfile& profile,
                                        double tol) {
    if (g.num_alive() == 0) throw GraphError("candidate_set: empty graph");
    auto scores = compute_centrality(g, profile.measure);
    return scores.candidate_set(profile.extremal == Extremal::High, tol);
}

ComponentRef attack_shot(Graph& g, const AttackProfile& profile, Rng& rng, double tol) {
    auto candidates = candidate_set(g, profile, tol);
    if (candidates.empty()) throw GraphError("attack_shot: nothing to remove");
    ComponentRef pick = candidates[rng.uniform_int(candidates.size())];
    remove_component(g, pick);
    return pick;
}

void remove_component(Graph& g, const ComponentRef& c) {
    if (c.kind == ComponentRef::Kind::Vertex)
        g.remove_vertex(c.u);
    else
        g.remove_edge(c.u, c.v);
}

std::size_t attack_until_disconnected(Graph& g, const AttackProfile& profile, Rng& rng,
                                      std::size_t shot_limit, double tol) {
    if (!is_connected(g)) throw DisconnectedInput("attack_until_disconnected: already disconnected");
    std::size_t shots = 0;
    while (true) {
        // a lone survivor still counts as connected; vertex profiles stop here
        if (profile.component == ComponentRef::Kind::Vertex && g.num_alive() <= 1)
            throw ShotLimitExceeded(shots);
        if (shots >= shot_limit) throw ShotLimitExceeded(shots);
        attack_shot(g, profile, rng, tol);
        ++shots;
        if (!is_connected(g)) return shots;
    }
}

namespace {

struct EfficacyCtx {
    const AttackProfile& profile;
    const EfficacyLimits& limits;
    double tol;
    std::unordered_set<std::string> seen;
    std::vector<std::size_t> leaf_depths;
    bool truncated = false;  // any limit cut something off
    bool stop = false;       // leaf budget exhausted, abort the whole search
};

bool is_end_state(const Graph& g, const AttackProfile& profile) {
    if (!is_connected(g)) return true;
    // vertex profiles bottom out at one survivor (still connected by rule)
    return profile.component == ComponentRef::Kind::Vertex && g.num_alive() <= 1;
}

void explore(EfficacyCtx& ctx, const Graph& g, std::size_t depth) {
    if (!ctx.seen.insert(g.canonical_key()).second) return;
    if (is_end_state(g, ctx.profile)) {
        if (ctx.leaf_depths.size() >= ctx.limits.max_unique_graphs) {
            ctx.truncated = ctx.stop = true;
            return;
        }
        ctx.leaf_depths.push_back(depth);
        return;
    }
    if (depth >= ctx.limits.max_depth) {
        // prune this path only; siblings may still finish
        ctx.truncated = true;
        return;
    }
    auto candidates = candidate_set(g, ctx.profile, ctx.tol);
    for (const auto& c : candidates) {
        Graph next = g;
        remove_component(next, c);
        explore(ctx, next, depth + 1);
        if (ctx.stop) return;
    }
}

}  // namespace

EfficacyStats recursive_efficacy(const Graph& g, const AttackProfile& profile,
                                 const EfficacyLimits& limits, double tol) {
    EfficacyLimits lim = limits;
    if (lim.max_depth == 0)
        lim.max_depth = profile.component == ComponentRef::Kind::Vertex ? g.num_alive()
                                                                        : g.num_edges();
    EfficacyCtx ctx{profile, lim, tol, {}, {}, false, false};
    explore(ctx, g, 0);

    EfficacyStats stats;
    stats.truncated = ctx.truncated;
    stats.states_seen = ctx.seen.size();
    stats.unique_graphs = ctx.leaf_depths.size();
    if (ctx.leaf_depths.empty()) return stats;
    stats.min_depth = *std::min_element(ctx.leaf_depths.begin(), ctx.leaf_depths.end());
    stats.max_depth = *std::max_element(ctx.leaf_depths.begin(), ctx.leaf_depths.end());
    double sum = 0.0;
    for (std::size_t d : ctx.leaf_depths) sum += static_cast<double>(d);
    stats.mean_depth = sum / static_cast<double>(ctx.leaf_depths.size());
    if (ctx.leaf_depths.size() > 1) {
        double sq = 0.0;
        for (std::size_t d : ctx.leaf_depths) {
            double diff = static_cast<double>(d) - stats.mean_depth;
            sq += diff * diff;
        }
        stats.stddev_depth = std::sqrt(sq / static_cast<double>(ctx.leaf_depths.size() - 1));
    }
    return stats;
}

double attacker_reach(double avg_degree, std::uint32_t pl, std::optional<std::size_t> n) {
    double reach = 1.0;
    double frontier = avg_degree;
    for (std::uint32_t i = 1; i <= pl; ++i) {
        reach += frontier;
        frontier *= avg_degree - 1.0;
    }
    if (n && reach > static_cast<double>(*n)) reach = static_cast<double>(*n);
    return reach;
}

}  // namespace uswsim
