#include "uswsim/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "uswsim/errors.hpp"

namespace uswsim {

const char* family_token(Family f) {
    switch (f) {
        case Family::Random: return "er";
        case Family::PowerLaw: return "pl";
        case Family::SmallWorld: return "ws";
        case Family::Usw: return "usw";
    }
    return "?";
}

Family parse_family(std::string_view token) {
    if (token == "er" || token == "random") return Family::Random;
    if (token == "pl" || token == "powerlaw") return Family::PowerLaw;
    if (token == "ws" || token == "smallworld") return Family::SmallWorld;
    if (token == "usw") return Family::Usw;
    throw DomainError("unknown graph family '" + std::string(token) + "'");
}

void GeneratorConfig::validate() const {
    auto in_unit = [](double x) { return x >= 0.0 && x <= 1.0; };
    switch (family) {
        case Family::Random:
            if (n < 1) throw Error("random: n must be >= 1");
            if (!in_unit(p)) throw Error("random: p must be in [0,1]");
            break;
        case Family::PowerLaw:
            if (m_attach < 1) throw Error("powerlaw: m_attach must be >= 1");
            if (n <= m_attach) throw Error("powerlaw: need n > m_attach");
            break;
        case Family::SmallWorld:
            if (k % 2 != 0 || k < 2) throw Error("smallworld: k must be even and >= 2");
            if (k >= n) throw Error("smallworld: need k < n");
            if (!in_unit(p)) throw Error("smallworld: p must be in [0,1]");
            break;
        case Family::Usw:
            if (n < 2) throw Error("usw: n must be >= 2");
            if (!in_unit(usw.beta) || !in_unit(usw.gamma) || !in_unit(usw.t))
                throw Error("usw: beta, gamma, t must be in [0,1]");
            break;
    }
    if (max_retries < 1) throw Error("max_retries must be >= 1");
}

Graph generate_random(std::size_t n, double p, Rng& rng) {
    Graph g(n);
    if (p <= 0.0) return g;
    for (VertexId u = 0; u + 1 < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) g.add_edge(u, v);
    return g;
}

Graph generate_power_law(std::size_t n, std::size_t m_attach, Rng& rng) {
    const std::size_t seed_n = m_attach + 1;
    Graph g(seed_n);
    // endpoint multiset: each vertex appears once per incident edge, so a
    // uniform draw is degree-proportional
    std::vector<VertexId> endpoints;
    endpoints.reserve(2 * n * m_attach);
    for (VertexId u = 0; u < seed_n; ++u)
        for (VertexId v = u + 1; v < seed_n; ++v) {
            g.add_edge(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    std::vector<VertexId> targets;
    for (std::size_t i = seed_n; i < n; ++i) {
        VertexId v = g.add_vertex();
        targets.clear();
        while (targets.size() < m_attach) {
            VertexId t = endpoints[rng.uniform_int(endpoints.size())];
            if (std::find(targets.begin(), targets.end(), t) == targets.end())
                targets.push_back(t);
        }
        for (VertexId t : targets) {
            g.add_edge(v, t);
            endpoints.push_back(v);
            endpoints.push_back(t);
        }
    }
    return g;
}

Graph generate_small_world(std::size_t n, std::size_t k, double p, Rng& rng) {
    Graph g(n);
    const std::size_t half = k / 2;
    for (VertexId u = 0; u < n; ++u)
        for (std::size_t j = 1; j <= half; ++j)
            g.add_edge(u, static_cast<VertexId>((u + j) % n));
    if (p <= 0.0) return g;
    // rewire every lattice edge with probability p; each slot is visited
    // exactly once, so no edge gets rewired twice
    for (VertexId u = 0; u < n; ++u) {
        for (std::size_t j = 1; j <= half; ++j) {
            VertexId v = static_cast<VertexId>((u + j) % n);
            if (!rng.bernoulli(p)) continue;
            VertexId w = 0;
            bool found = false;
            for (int tries = 0; tries < 32; ++tries) {
                w = static_cast<VertexId>(rng.uniform_int(n));
                if (w != u && w != v && !g.has_edge(u, w)) {
                    found = true;
                    break;
                }
            }
            if (!found) continue;  // graph too dense around u, keep the lattice edge
            g.remove_edge(u, v);
            g.add_edge(u, w);
        }
    }
    return g;
}

UswWalkStats usw_attach_walk(Graph& g, VertexId node, const std::vector<VertexId>& pool,
                             const UswParams& params, std::vector<VertexId>& failed, Rng& rng,
                             std::vector<VertexId>* visited_out) {
    UswWalkStats stats;
    if (pool.empty()) return stats;
    const VertexId entry = pool[rng.uniform_int(pool.size())];
    const std::size_t cap =
        static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(pool.size())))) + 5;

    std::vector<std::uint8_t> in_pool(g.capacity(), 0);
    for (VertexId v : pool) in_pool[v] = 1;
    std::vector<std::uint8_t> enqueued(g.capacity(), 0);
    std::vector<VertexId> queue;
    queue.reserve(cap * 4);
    queue.push_back(entry);
    enqueued[entry] = 1;

    std::size_t head = 0, visited = 0;
    while (head < queue.size() && visited < cap) {
        VertexId u = queue[head++];
        ++visited;
        if (visited_out) visited_out->push_back(u);
        if (rng.uniform() > params.beta) {
            ++stats.attempted;
            if (g.add_edge(node, u)) ++stats.added;
            // a success also revisits part of the failed/never-considered
            // list: a gamma fraction gets a direct edge and leaves the list
            const std::size_t take =
                static_cast<std::size_t>(params.gamma * static_cast<double>(failed.size()));
            if (take > 0) {
                auto picks = rng.sample_indices(failed.size(), take);
                std::sort(picks.begin(), picks.end());
                for (std::size_t idx : picks) {
                    ++stats.attempted;
                    if (g.add_edge(node, failed[idx])) ++stats.added;
                }
                for (std::size_t i = picks.size(); i-- > 0;)
                    failed.erase(failed.begin() + static_cast<std::ptrdiff_t>(picks[i]));
            }
        } else {
            if (std::find(failed.begin(), failed.end(), u) == failed.end()) failed.push_back(u);
        }
        for (VertexId w : g.neighbors(u))
            if (in_pool[w] && !enqueued[w] && w != node) {
                enqueued[w] = 1;
                queue.push_back(w);
            }
    }
    return stats;
}

Graph generate_usw(std::size_t n, const UswParams& params, Rng& rng) {
    Graph g;
    g.add_vertex();
    std::vector<VertexId> pool;
    pool.reserve(n);
    pool.push_back(0);
    std::vector<VertexId> failed;
    for (std::size_t i = 1; i < n; ++i) {
        VertexId v = g.add_vertex();
        failed.clear();
        // walk until the newcomer lands an edge; with beta near 1 this can
        // take a while, so after enough dry walks connect it directly to a
        // random entry so the process always terminates
        for (int walks = 0; g.degree(v) == 0; ++walks) {
            if (walks >= 256) {
                g.add_edge(v, pool[rng.uniform_int(pool.size())]);
                break;
            }
            usw_attach_walk(g, v, pool, params, failed, rng);
        }
        pool.push_back(v);
    }
    return g;
}

Graph generate(const GeneratorConfig& config) {
    config.validate();
    for (std::size_t attempt = 0; attempt < config.max_retries; ++attempt) {
        Rng rng(derive_seed(config.seed, attempt));
        Graph g;
        switch (config.family) {
            case Family::Random: g = generate_random(config.n, config.p, rng); break;
            case Family::PowerLaw: g = generate_power_law(config.n, config.m_attach, rng); break;
            case Family::SmallWorld:
                g = generate_small_world(config.n, config.k, config.p, rng);
                break;
            case Family::Usw: g = generate_usw(config.n, config.usw, rng); break;
        }
        if (is_connected(g)) return g;
    }
    throw RetryExhausted(std::string("no connected ") + family_token(config.family) +
                         " graph in " + std::to_string(config.max_retries) +
                         " attempts; parameters too sparse?");
}

}  // namespace uswsim
