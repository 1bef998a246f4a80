#include "uswsim/centrality.hpp"

#include <algorithm>
#include <cmath>

#include "uswsim/errors.hpp"

namespace uswsim {

const char* centrality_name(CentralityKind k) {
    switch (k) {
        case CentralityKind::Degree: return "degree";
        case CentralityKind::BetweennessVertex: return "betweenness_vertex";
        case CentralityKind::BetweennessEdge: return "betweenness_edge";
        case CentralityKind::Closeness: return "closeness";
    }
    return "?";
}

std::vector<ComponentRef> CentralityScores::candidate_set(bool highest, double tol) const {
    std::vector<ComponentRef> out;
    if (scores.empty()) return out;
    double extreme = scores.front().second;
    for (const auto& [c, s] : scores)
        if (highest ? s > extreme : s < extreme) extreme = s;
    for (const auto& [c, s] : scores)
        if (std::abs(s - extreme) <= tol) out.push_back(c);
    return out;
}

CentralityScores degree_centrality(const Graph& g) {
    CentralityScores out;
    out.kind = CentralityKind::Degree;
    for (VertexId v : g.alive_vertices())
        out.scores.emplace_back(ComponentRef::vertex(v), static_cast<double>(g.degree(v)));
    return out;
}

namespace {

// Shared plumbing for the two Brandes variants. One BFS per source over
// the alive graph; the bfs order vector doubles as the stack for the
// dependency accumulation sweep. Buffers are allocated once per
// evaluation, not per source.
struct BrandesWork {
    std::vector<double> sigma;      // geodesic counts
    std::vector<double> delta;      // dependency accumulator
    std::vector<std::uint32_t> dist;
    std::vector<VertexId> order;    // BFS visit order

    explicit BrandesWork(std::size_t cap)
        : sigma(cap, 0.0), delta(cap, 0.0), dist(cap, kUnreachable) {
        order.reserve(cap);
    }

    void reset() {
        // cheaper than a full refill: only touched entries are dirty
        for (VertexId v : order) {
            sigma[v] = 0.0;
            delta[v] = 0.0;
            dist[v] = kUnreachable;
        }
        order.clear();
    }

    void bfs(const Graph& g, VertexId s) {
        sigma[s] = 1.0;
        dist[s] = 0;
        order.push_back(s);
        for (std::size_t head = 0; head < order.size(); ++head) {
            VertexId u = order[head];
            for (VertexId w : g.neighbors(u)) {
                if (dist[w] == kUnreachable) {
                    dist[w] = dist[u] + 1;
                    order.push_back(w);
                }
                if (dist[w] == dist[u] + 1) sigma[w] += sigma[u];
            }
        }
    }
};

}  // namespace

CentralityScores betweenness_vertex(const Graph& g) {
    const std::size_t cap = g.capacity();
    std::vector<double> score(cap, 0.0);
    BrandesWork work(cap);
    auto alive = g.alive_vertices();
    for (VertexId s : alive) {
        work.reset();
        work.bfs(g, s);
        // reverse BFS order: every vertex is settled after all farther ones
        for (std::size_t i = work.order.size(); i-- > 1;) {
            VertexId w = work.order[i];
            const double coeff = (1.0 + work.delta[w]) / work.sigma[w];
            for (VertexId v : g.neighbors(w))
                if (work.dist[v] + 1 == work.dist[w]) work.delta[v] += work.sigma[v] * coeff;
            score[w] += work.delta[w];
        }
    }
    CentralityScores out;
    out.kind = CentralityKind::BetweennessVertex;
    for (VertexId v : alive)
        // each unordered pair was accumulated from both endpoints
        out.scores.emplace_back(ComponentRef::vertex(v), score[v] / 2.0);
    return out;
}

CentralityScores betweenness_edge(const Graph& g) {
    const std::size_t cap = g.capacity();
    auto edges = g.alive_edges();  // lexicographic, defines edge ids
    // per-adjacency-slot edge id so the inner loop has O(1) lookups
    std::vector<std::vector<std::size_t>> slot_id(cap);
    for (VertexId v = 0; v < cap; ++v)
        if (g.is_alive(v)) slot_id[v].resize(g.neighbors(v).size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        auto nu = g.neighbors(u);
        slot_id[u][std::lower_bound(nu.begin(), nu.end(), v) - nu.begin()] = e;
        auto nv = g.neighbors(v);
        slot_id[v][std::lower_bound(nv.begin(), nv.end(), u) - nv.begin()] = e;
    }

    std::vector<double> score(edges.size(), 0.0);
    BrandesWork work(cap);
    auto alive = g.alive_vertices();
    for (VertexId s : alive) {
        work.reset();
        work.bfs(g, s);
        for (std::size_t i = work.order.size(); i-- > 1;) {
            VertexId w = work.order[i];
            const double coeff = (1.0 + work.delta[w]) / work.sigma[w];
            auto nbrs = g.neighbors(w);
            for (std::size_t j = 0; j < nbrs.size(); ++j) {
                VertexId v = nbrs[j];
                if (work.dist[v] + 1 == work.dist[w]) {
                    const double c = work.sigma[v] * coeff;
                    work.delta[v] += c;
                    score[slot_id[w][j]] += c;
                }
            }
        }
    }
    CentralityScores out;
    out.kind = CentralityKind::BetweennessEdge;
    for (std::size_t e = 0; e < edges.size(); ++e)
        out.scores.emplace_back(ComponentRef::edge(edges[e].first, edges[e].second),
                                score[e] / 2.0);
    return out;
}

CentralityScores closeness_centrality(const Graph& g) {
    auto alive = g.alive_vertices();
    CentralityScores out;
    out.kind = CentralityKind::Closeness;
    if (alive.size() == 1) {
        out.scores.emplace_back(ComponentRef::vertex(alive[0]), 0.0);
        return out;
    }
    BrandesWork work(g.capacity());
    for (VertexId s : alive) {
        work.reset();
        work.bfs(g, s);
        if (work.order.size() != alive.size())
            throw DisconnectedInput("closeness: vertex " + std::to_string(s) +
                                    " cannot reach the whole graph");
        std::uint64_t sum = 0;
        for (VertexId v : work.order) sum += work.dist[v];
        out.scores.emplace_back(ComponentRef::vertex(s),
                                static_cast<double>(alive.size() - 1) / static_cast<double>(sum));
    }
    return out;
}

CentralityScores compute_centrality(const Graph& g, CentralityKind kind) {
    switch (kind) {
        case CentralityKind::Degree: return degree_centrality(g);
        case CentralityKind::BetweennessVertex: return betweenness_vertex(g);
        case CentralityKind::BetweennessEdge: return betweenness_edge(g);
        case CentralityKind::Closeness: return closeness_centrality(g);
    }
    throw Error("compute_centrality: bad kind");
}

}  // namespace uswsim
