#include "uswsim/metrics.hpp"

#include <algorithm>

#include "uswsim/errors.hpp"

namespace uswsim {

namespace {

// Sum of 1/d(u,v) over ordered alive pairs (unreachable contributes 0).
double inverse_distance_sum(const Graph& g) {
    double sum = 0.0;
    for (VertexId s : g.alive_vertices()) {
        auto dist = bfs_distances(g, s);
        for (VertexId v = 0; v < g.capacity(); ++v)
            if (v != s && dist[v] != kUnreachable) sum += 1.0 / dist[v];
    }
    return sum;
}

struct LccStats {
    std::size_t n = 0;
    std::size_t m = 0;
    std::uint64_t dist_sum = 0;  // ordered pairs
    std::uint32_t diameter = 0;
};

LccStats lcc_stats(const Graph& g) {
    LccStats st;
    auto lcc = largest_component(g);
    st.n = lcc.size();
    if (lcc.empty()) return st;
    std::vector<std::uint8_t> in_lcc(g.capacity(), 0);
    for (VertexId v : lcc) in_lcc[v] = 1;
    for (VertexId v : lcc)
        for (VertexId w : g.neighbors(v))
            if (v < w) ++st.m;  // neighbors inside the component by definition
    for (VertexId s : lcc) {
        auto dist = bfs_distances(g, s);
        for (VertexId v : lcc) {
            if (v == s) continue;
            st.dist_sum += dist[v];
            st.diameter = std::max(st.diameter, dist[v]);
        }
    }
    return st;
}

// closed neighbor-pair counts for global transitivity
void triad_counts(const Graph& g, std::uint64_t& closed, std::uint64_t& total) {
    closed = 0;
    total = 0;
    for (VertexId u : g.alive_vertices()) {
        auto nbrs = g.neighbors(u);
        const std::uint64_t d = nbrs.size();
        if (d >= 2) total += d * (d - 1) / 2;
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                if (g.has_edge(nbrs[i], nbrs[j])) ++closed;
    }
}

}  // namespace

double avg_inverse_path_length(const Graph& g) {
    const std::size_t n = g.num_alive();
    if (n < 2) throw DomainError("avg_inverse_path_length: need at least 2 vertices");
    return inverse_distance_sum(g) / (static_cast<double>(n) * (n - 1));
}

double global_efficiency(const Graph& g) {
    const std::size_t n = g.num_alive();
    if (n < 2) throw DomainError("global_efficiency: need at least 2 vertices");
    return inverse_distance_sum(g) / (static_cast<double>(n) * (n - 1));
}

double avg_path_length(const Graph& g) {
    auto st = lcc_stats(g);
    if (st.n < 2) throw DomainError("avg_path_length: largest component has < 2 vertices");
    return static_cast<double>(st.dist_sum) / (static_cast<double>(st.n) * (st.n - 1));
}

double clustering_coefficient(const Graph& g) {
    std::uint64_t closed = 0, total = 0;
    triad_counts(g, closed, total);
    if (total == 0) return 0.0;
    return static_cast<double>(closed) / static_cast<double>(total);
}

double density(const Graph& g) {
    auto st = lcc_stats(g);
    if (st.n < 2) return 0.0;
    return static_cast<double>(st.m) / (static_cast<double>(st.n) * (st.n - 1) / 2.0);
}

std::uint32_t diameter(const Graph& g) {
    auto st = lcc_stats(g);
    if (st.n == 0) throw DomainError("diameter: no alive vertices");
    return st.diameter;
}

double damage_ratio(const Graph& g) {
    const std::size_t n = g.num_alive();
    if (n == 0) throw DomainError("damage_ratio: no alive vertices");
    return static_cast<double>(largest_component(g).size()) / static_cast<double>(n);
}

MetricsSnapshot take_snapshot(const Graph& g) {
    MetricsSnapshot s;
    s.n_alive = g.num_alive();
    s.m_alive = g.num_edges();
    if (s.n_alive == 0) return s;

    auto st = lcc_stats(g);
    s.lcc_size = st.n;
    s.damage_ratio = static_cast<double>(st.n) / static_cast<double>(s.n_alive);
    s.diameter = st.diameter;
    if (st.n >= 2) {
        s.avg_path_length =
            static_cast<double>(st.dist_sum) / (static_cast<double>(st.n) * (st.n - 1));
        s.density = static_cast<double>(st.m) / (static_cast<double>(st.n) * (st.n - 1) / 2.0);
    }
    if (s.n_alive >= 2) {
        double inv = inverse_distance_sum(g);
        s.avg_inverse_path_length = inv / (static_cast<double>(s.n_alive) * (s.n_alive - 1));
        s.global_efficiency = s.avg_inverse_path_length;
    }
    s.clustering = clustering_coefficient(g);
    return s;
}

}  // namespace uswsim
