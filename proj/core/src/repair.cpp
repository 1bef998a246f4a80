#include "uswsim/repair.hpp"

#include <algorithm>
#include <cmath>

#include "uswsim/errors.hpp"

namespace uswsim {

bool locality_audit(const RepairTrace& trace) {
    if (trace.consulted_centrality) return false;
    std::vector<VertexId> allowed = trace.allowed;
    std::sort(allowed.begin(), allowed.end());
    for (VertexId v : trace.consulted)
        if (!std::binary_search(allowed.begin(), allowed.end(), v)) return false;
    return true;
}

RepairReport repair_turn_standard(Graph& g, const RepairPolicy& policy, Rng& rng,
                                  RepairTrace* trace) {
    RepairReport report;
    if (trace) {
        trace->kind = RepairKind::Standard;
        for (const auto& [v, rec] : g.removed_ledger()) {
            trace->allowed.push_back(v);
            trace->allowed.insert(trace->allowed.end(), rec.begin(), rec.end());
        }
    }
    const auto& ledger = g.removed_ledger();
    if (ledger.empty()) return report;

    std::vector<VertexId> down;
    down.reserve(ledger.size());
    for (const auto& [v, rec] : ledger) down.push_back(v);
    const std::size_t count = static_cast<std::size_t>(
        std::ceil(policy.reactivation_fraction * static_cast<double>(down.size())));
    if (count == 0) return report;

    auto picks = rng.sample_indices(down.size(), count);
    // phase 1: revive everything first, so vertices coming back together
    // this turn can reconnect to each other
    std::vector<std::pair<VertexId, std::vector<VertexId>>> revived;
    revived.reserve(count);
    for (std::size_t idx : picks) {
        VertexId v = down[idx];
        revived.emplace_back(v, g.revive_vertex(v));
        ++report.vertices_restored;
    }
    // phase 2: each original edge with an alive other endpoint gets one
    // independent restoration attempt; edges whose other endpoint is still
    // down go back into that endpoint's ledger record for a later turn
    for (auto& [v, record] : revived) {
        if (trace) {
            trace->consulted.push_back(v);
            trace->consulted.insert(trace->consulted.end(), record.begin(), record.end());
        }
        for (VertexId w : record) {
            if (!g.is_alive(w)) {
                g.stash_edge(w, v);
                continue;
            }
            ++report.edges_attempted;
            if (rng.bernoulli(policy.attempt_success_prob)) {
                if (g.add_edge(v, w)) ++report.edges_restored;
            }
        }
    }
    return report;
}

RepairReport repair_turn_usw(Graph& g, const RepairPolicy& policy, Rng& rng,
                             RepairTrace* trace) {
    if (!policy.usw)
        throw MissingUswParams("usw repair needs the graph's construction parameters");
    const UswParams& params = *policy.usw;
    RepairReport report;
    if (trace) trace->kind = RepairKind::Usw;

    auto alive = g.alive_vertices();
    const std::size_t n_alive = alive.size();
    if (n_alive < 2 || params.l_repair == 0) return report;

    const std::size_t n_nodes = std::min(params.l_repair, n_alive);
    auto node_picks = rng.sample_indices(n_alive, n_nodes);
    for (std::size_t node_idx : node_picks) {
        const VertexId node = alive[node_idx];
        if (trace) trace->consulted.push_back(node);
        // this node's own candidate pool: a t-fraction of the alive graph,
        // never including the node itself
        std::vector<VertexId> others;
        others.reserve(n_alive - 1);
        for (VertexId v : alive)
            if (v != node) others.push_back(v);
        std::size_t pool_size = static_cast<std::size_t>(
            std::ceil(params.t * static_cast<double>(n_alive)));
        pool_size = std::min(pool_size, others.size());
        if (pool_size == 0) continue;
        auto pool_picks = rng.sample_indices(others.size(), pool_size);
        std::vector<VertexId> pool;
        pool.reserve(pool_size);
        for (std::size_t idx : pool_picks) pool.push_back(others[idx]);
        if (trace) {
            trace->allowed.push_back(node);
            trace->allowed.insert(trace->allowed.end(), pool.begin(), pool.end());
        }

        std::vector<VertexId> failed;
        std::vector<VertexId> visited;
        auto stats = usw_attach_walk(g, node, pool, params, failed, rng,
                                     trace ? &visited : nullptr);
        report.edges_attempted += stats.attempted;
        report.edges_restored += stats.added;
        if (trace)
            trace->consulted.insert(trace->consulted.end(), visited.begin(), visited.end());
    }
    return report;
}

RepairReport repair_turn(Graph& g, const RepairPolicy& policy, Rng& rng, RepairTrace* trace) {
    switch (policy.kind) {
        case RepairKind::Standard: return repair_turn_standard(g, policy, rng, trace);
        case RepairKind::Usw: return repair_turn_usw(g, policy, rng, trace);
    }
    throw Error("repair_turn: bad policy kind");
}

}  // namespace uswsim
