#include "uswsim/graph.hpp"

#include <algorithm>
#include <queue>

#include "uswsim/errors.hpp"

namespace uswsim {

std::string ComponentRef::str() const {
    if (kind == Kind::Vertex) return "v" + std::to_string(u);
    return "e" + std::to_string(u) + "-" + std::to_string(v);
}

Graph::Graph(std::size_t n) : adj_(n), alive_(n, 1), n_alive_(n) {}

void Graph::require_alive(VertexId v, const char* what) const {
    if (v >= adj_.size())
        throw GraphError(std::string(what) + ": unknown vertex " + std::to_string(v));
    if (!alive_[v])
        throw GraphError(std::string(what) + ": vertex " + std::to_string(v) + " is removed");
}

VertexId Graph::add_vertex() {
    adj_.emplace_back();
    alive_.push_back(1);
    ++n_alive_;
    return static_cast<VertexId>(adj_.size() - 1);
}

bool Graph::add_edge(VertexId u, VertexId v) {
    require_alive(u, "add_edge");
    require_alive(v, "add_edge");
    if (u == v) throw GraphError("add_edge: self loop on vertex " + std::to_string(u));
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return false;
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++m_alive_;
    return true;
}

void Graph::remove_edge(VertexId u, VertexId v) {
    require_alive(u, "remove_edge");
    require_alive(v, "remove_edge");
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it == au.end() || *it != v)
        throw GraphError("remove_edge: no edge " + std::to_string(u) + "-" + std::to_string(v));
    au.erase(it);
    auto& av = adj_[v];
    av.erase(std::lower_bound(av.begin(), av.end(), u));
    --m_alive_;
}

void Graph::remove_vertex(VertexId v) {
    require_alive(v, "remove_vertex");
    std::vector<VertexId> lost = std::move(adj_[v]);
    adj_[v].clear();
    for (VertexId w : lost) {
        auto& aw = adj_[w];
        aw.erase(std::lower_bound(aw.begin(), aw.end(), v));
    }
    m_alive_ -= lost.size();
    alive_[v] = 0;
    --n_alive_;
    removed_.emplace(v, std::move(lost));
}

std::vector<VertexId> Graph::revive_vertex(VertexId v) {
    auto it = removed_.find(v);
    if (it == removed_.end())
        throw GraphError("revive_vertex: vertex " + std::to_string(v) + " is not in the ledger");
    std::vector<VertexId> record = std::move(it->second);
    removed_.erase(it);
    alive_[v] = 1;
    ++n_alive_;
    return record;
}

void Graph::stash_edge(VertexId dead, VertexId other) {
    auto it = removed_.find(dead);
    if (it == removed_.end())
        throw GraphError("stash_edge: vertex " + std::to_string(dead) + " is not in the ledger");
    if (other >= adj_.size())
        throw GraphError("stash_edge: no such vertex " + std::to_string(other));
    auto& rec = it->second;
    auto pos = std::lower_bound(rec.begin(), rec.end(), other);
    if (pos != rec.end() && *pos == other) return;
    rec.insert(pos, other);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (!is_alive(u) || !is_alive(v)) return false;
    const auto& au = adj_[u];
    return std::binary_search(au.begin(), au.end(), v);
}

std::size_t Graph::degree(VertexId v) const {
    require_alive(v, "degree");
    return adj_[v].size();
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    require_alive(v, "neighbors");
    return adj_[v];
}

std::vector<VertexId> Graph::alive_vertices() const {
    std::vector<VertexId> out;
    out.reserve(n_alive_);
    for (VertexId v = 0; v < adj_.size(); ++v)
        if (alive_[v]) out.push_back(v);
    return out;
}

std::vector<std::pair<VertexId, VertexId>> Graph::alive_edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(m_alive_);
    for (VertexId u = 0; u < adj_.size(); ++u) {
        if (!alive_[u]) continue;
        for (VertexId v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    }
    return out;
}

std::string Graph::canonical_key() const {
    std::string key;
    key.reserve(n_alive_ * 4 + m_alive_ * 8);
    key += "V:";
    for (VertexId v = 0; v < adj_.size(); ++v) {
        if (!alive_[v]) continue;
        key += std::to_string(v);
        key += ',';
    }
    key += "E:";
    for (VertexId u = 0; u < adj_.size(); ++u) {
        if (!alive_[u]) continue;
        for (VertexId v : adj_[u]) {
            if (u >= v) continue;
            key += std::to_string(u);
            key += '-';
            key += std::to_string(v);
            key += ',';
        }
    }
    return key;
}

void Graph::check_invariants() const {
    std::size_t n_seen = 0, half_edges = 0;
    for (VertexId v = 0; v < adj_.size(); ++v) {
        if (!alive_[v]) {
            if (!adj_[v].empty())
                throw GraphError("invariant: removed vertex " + std::to_string(v) +
                                 " still has adjacency");
            continue;
        }
        ++n_seen;
        const auto& av = adj_[v];
        for (std::size_t i = 0; i < av.size(); ++i) {
            VertexId w = av[i];
            if (w == v) throw GraphError("invariant: self loop on " + std::to_string(v));
            if (i > 0 && av[i - 1] >= w)
                throw GraphError("invariant: adjacency of " + std::to_string(v) +
                                 " not strictly sorted");
            if (!is_alive(w))
                throw GraphError("invariant: edge " + std::to_string(v) + "-" +
                                 std::to_string(w) + " touches a removed vertex");
            const auto& aw = adj_[w];
            if (!std::binary_search(aw.begin(), aw.end(), v))
                throw GraphError("invariant: edge " + std::to_string(v) + "-" +
                                 std::to_string(w) + " missing its mirror");
        }
        half_edges += av.size();
    }
    if (n_seen != n_alive_) throw GraphError("invariant: alive vertex count is off");
    if (half_edges != 2 * m_alive_) throw GraphError("invariant: edge count is off");
    for (const auto& [v, rec] : removed_) {
        if (is_alive(v))
            throw GraphError("invariant: ledger holds alive vertex " + std::to_string(v));
        (void)rec;
    }
}

bool is_connected(const Graph& g) {
    const std::size_t n = g.num_alive();
    if (n <= 1) return true;
    VertexId start = 0;
    while (!g.is_alive(start)) ++start;
    std::vector<std::uint8_t> seen(g.capacity(), 0);
    std::vector<VertexId> stack{start};
    seen[start] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors(u)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
    std::vector<std::vector<VertexId>> comps;
    std::vector<std::uint8_t> seen(g.capacity(), 0);
    for (VertexId s = 0; s < g.capacity(); ++s) {
        if (!g.is_alive(s) || seen[s]) continue;
        std::vector<VertexId> comp;
        std::vector<VertexId> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (VertexId w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    // bfs from ascending seeds already yields components ordered by their
    // smallest member
    return comps;
}

std::vector<VertexId> largest_component(const Graph& g) {
    auto comps = connected_components(g);
    if (comps.empty()) return {};
    std::size_t best = 0;
    for (std::size_t i = 1; i < comps.size(); ++i)
        if (comps[i].size() > comps[best].size()) best = i;  // first wins ties
    return std::move(comps[best]);
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, VertexId source) {
    if (!g.is_alive(source))
        throw GraphError("bfs_distances: source " + std::to_string(source) + " is not alive");
    std::vector<std::uint32_t> dist(g.capacity(), kUnreachable);
    dist[source] = 0;
    std::queue<VertexId> q;
    q.push(source);
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop();
        for (VertexId w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

Graph induced_subgraph_by_radius(const Graph& g, VertexId root, std::uint32_t radius) {
    auto dist = bfs_distances(g, root);
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < g.capacity(); ++v)
        if (dist[v] != kUnreachable && dist[v] <= radius) keep.push_back(v);
    std::vector<VertexId> relabel(g.capacity(), kUnreachable);
    for (std::size_t i = 0; i < keep.size(); ++i) relabel[keep[i]] = static_cast<VertexId>(i);
    Graph sub(keep.size());
    for (VertexId u : keep)
        for (VertexId w : g.neighbors(u))
            if (u < w && relabel[w] != kUnreachable) sub.add_edge(relabel[u], relabel[w]);
    return sub;
}

}  // namespace uswsim
