#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace uswsim {

using VertexId = std::uint32_t;

// Distance value meaning "not reachable" (also returned for dead vertices).
inline constexpr std::uint32_t kUnreachable = 0xffffffffu;

// One attackable thing: a vertex or an undirected edge. Edges are stored
// with u < v so the same edge always compares equal.
struct ComponentRef {
    enum class Kind : std::uint8_t { Vertex, Edge };

    Kind kind = Kind::Vertex;
    VertexId u = 0;
    VertexId v = 0;  // == u for vertices

    static ComponentRef vertex(VertexId id) { return {Kind::Vertex, id, id}; }
    static ComponentRef edge(VertexId a, VertexId b) {
        if (a > b) std::swap(a, b);
        return {Kind::Edge, a, b};
    }

    std::string str() const;  // "v12" or "e3-7"

    friend bool operator==(const ComponentRef&, const ComponentRef&) = default;
    friend auto operator<=>(const ComponentRef&, const ComponentRef&) = default;
};

// Undirected simple graph over dense integer labels, with removal
// bookkeeping. remove_vertex parks the vertex in a ledger together with
// the neighbors it had at that moment, so a repair step can put it back;
// labels are stable for the lifetime of the graph and never reused.
//
// Adjacency lists are kept sorted, so neighbors() is always in ascending
// order and iteration order is deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    // Appends a new alive vertex and returns its label.
    VertexId add_vertex();

    // Adds edge {u,v}. Returns false if it already exists. Throws
    // GraphError on self loops and dead/unknown endpoints.
    bool add_edge(VertexId u, VertexId v);

    // Removes edge {u,v}; throws GraphError if absent.
    void remove_edge(VertexId u, VertexId v);

    // Removes v and its incident edges; the edges go into the removal
    // ledger under v. Throws GraphError if v is not alive.
    void remove_vertex(VertexId v);

    // Brings a removed vertex back with degree 0 and returns its ledger
    // record: the neighbors it was attached to when it was removed.
    std::vector<VertexId> revive_vertex(VertexId v);

    // Moves a ledgered edge onto the still-removed vertex `dead`, so it is
    // offered again when that vertex revives. Repair uses this when it
    // brings back one endpoint of an edge whose other endpoint is still
    // down; without it the edge would silently drop out of the ledger.
    void stash_edge(VertexId dead, VertexId other);

    std::size_t num_alive() const { return n_alive_; }
    std::size_t num_edges() const { return m_alive_; }
    // Size of the label space: alive + removed vertices.
    std::size_t capacity() const { return adj_.size(); }

    bool is_alive(VertexId v) const { return v < adj_.size() && alive_[v]; }
    bool has_edge(VertexId u, VertexId v) const;
    std::size_t degree(VertexId v) const;
    std::span<const VertexId> neighbors(VertexId v) const;

    std::vector<VertexId> alive_vertices() const;  // ascending
    // Each pair with u < v, sorted lexicographically.
    std::vector<std::pair<VertexId, VertexId>> alive_edges() const;

    // Removal ledger, keyed by removed vertex. A record holds the
    // neighbors that were alive when the vertex went down, so every
    // original edge lives in exactly one record.
    const std::map<VertexId, std::vector<VertexId>>& removed_ledger() const {
        return removed_;
    }

    // Canonical text key of (alive vertices, alive edges). Two graphs over
    // the same label space get equal keys iff they have the same alive
    // vertex set and edge set. Used for state deduplication.
    std::string canonical_key() const;

    // Checks simplicity, adjacency symmetry and edge/vertex counters.
    // Throws GraphError on the first violation found.
    void check_invariants() const;

private:
    void require_alive(VertexId v, const char* what) const;

    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::uint8_t> alive_;
    std::map<VertexId, std::vector<VertexId>> removed_;
    std::size_t n_alive_ = 0;
    std::size_t m_alive_ = 0;
};

// True if every alive vertex can reach every other. Graphs with 0 or 1
// alive vertices count as connected.
bool is_connected(const Graph& g);

// Partition of the alive vertices into connected components. Components
// are ordered by their smallest vertex, members ascending.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

// Vertices of the largest component; ties go to the component containing
// the smallest vertex label.
std::vector<VertexId> largest_component(const Graph& g);

// BFS hop distances from source to every label; kUnreachable for dead or
// unreachable vertices. Throws GraphError if source is not alive.
std::vector<std::uint32_t> bfs_distances(const Graph& g, VertexId source);

// Subgraph induced by the alive vertices within `radius` hops of root,
// relabeled 0..k-1 in ascending order of original label.
Graph induced_subgraph_by_radius(const Graph& g, VertexId root, std::uint32_t radius);

}  // namespace uswsim
