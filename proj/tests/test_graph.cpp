#include <doctest.h>

#include <algorithm>

#include "uswsim/errors.hpp"
#include "uswsim/graph.hpp"
#include "uswsim/rng.hpp"

using namespace uswsim;

TEST_CASE("path graph construction") {
    Graph g(3);
    CHECK(g.add_edge(0, 1));
    CHECK(g.add_edge(1, 2));
    CHECK(g.num_alive() == 3);
    CHECK(g.num_edges() == 2);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(0) == 1);
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    g.check_invariants();
}

TEST_CASE("duplicate add_edge is a no-op returning false") {
    Graph g(2);
    CHECK(g.add_edge(0, 1));
    CHECK_FALSE(g.add_edge(0, 1));
    CHECK_FALSE(g.add_edge(1, 0));
    CHECK(g.num_edges() == 1);
}

TEST_CASE("self loops and dead endpoints are rejected") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), GraphError);
    CHECK_THROWS_AS(g.add_edge(0, 7), GraphError);
    g.remove_vertex(2);
    CHECK_THROWS_AS(g.add_edge(0, 2), GraphError);
    CHECK_THROWS_AS(g.degree(2), GraphError);
}

TEST_CASE("removing the middle of P3 ledgers both edges") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.remove_vertex(1);
    CHECK(g.num_alive() == 2);
    CHECK(g.num_edges() == 0);
    REQUIRE(g.removed_ledger().count(1) == 1);
    const auto& rec = g.removed_ledger().at(1);
    CHECK(rec == std::vector<VertexId>{0, 2});
    CHECK_FALSE(is_connected(g));
    g.check_invariants();
}

TEST_CASE("each original edge lands in exactly one ledger record") {
    Graph g(4);  // K4
    for (VertexId u = 0; u < 4; ++u)
        for (VertexId v = u + 1; v < 4; ++v) g.add_edge(u, v);
    g.remove_vertex(0);
    g.remove_vertex(1);
    CHECK(g.removed_ledger().at(0) == std::vector<VertexId>{1, 2, 3});
    // 1's record only holds endpoints alive at its removal; 0 was gone
    CHECK(g.removed_ledger().at(1) == std::vector<VertexId>{2, 3});
}

TEST_CASE("revive brings a vertex back bare and hands over its record") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.remove_vertex(1);
    auto rec = g.revive_vertex(1);
    CHECK(rec == std::vector<VertexId>{0, 2});
    CHECK(g.is_alive(1));
    CHECK(g.degree(1) == 0);
    CHECK(g.removed_ledger().empty());
    CHECK_THROWS_AS(g.revive_vertex(1), GraphError);
}

TEST_CASE("connectivity on small cases") {
    Graph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    CHECK(is_connected(k3));

    Graph two_edges(4);
    two_edges.add_edge(0, 1);
    two_edges.add_edge(2, 3);
    CHECK_FALSE(is_connected(two_edges));

    Graph single(1);
    CHECK(is_connected(single));
    Graph empty;
    CHECK(is_connected(empty));

    // removing a leaf cannot disconnect
    Graph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    p3.remove_vertex(2);
    CHECK(is_connected(p3));
}

TEST_CASE("components are ordered by smallest member, ties by size") {
    Graph g(6);
    g.add_edge(3, 4);  // component {3,4}
    g.add_edge(3, 5);  // -> {3,4,5}
    g.add_edge(0, 1);  // {0,1}
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<VertexId>{0, 1});
    CHECK(comps[1] == std::vector<VertexId>{2});
    CHECK(comps[2] == std::vector<VertexId>{3, 4, 5});
    CHECK(largest_component(g) == std::vector<VertexId>{3, 4, 5});

    // equal sizes: the component with the smallest vertex wins
    Graph h(4);
    h.add_edge(0, 3);
    h.add_edge(1, 2);
    CHECK(largest_component(h) == std::vector<VertexId>{0, 3});
}

TEST_CASE("bfs distances on C4 and P5") {
    Graph c4(4);
    c4.add_edge(0, 1);
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(3, 0);
    auto d = bfs_distances(c4, 0);
    CHECK(d[0] == 0);
    CHECK(d[1] == 1);
    CHECK(d[2] == 2);
    CHECK(d[3] == 1);

    Graph p5(5);
    for (VertexId i = 0; i + 1 < 5; ++i) p5.add_edge(i, i + 1);
    d = bfs_distances(p5, 0);
    for (VertexId i = 0; i < 5; ++i) CHECK(d[i] == i);

    Graph split(3);
    split.add_edge(0, 1);
    d = bfs_distances(split, 0);
    CHECK(d[2] == kUnreachable);
    CHECK_THROWS_AS(bfs_distances(split, 9), GraphError);
}

TEST_CASE("radius-limited induced subgraph on C6") {
    Graph c6(6);
    for (VertexId i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    // radius 2 around 0 keeps {0,1,2,4,5}: the two arcs, not vertex 3
    Graph sub = induced_subgraph_by_radius(c6, 0, 2);
    CHECK(sub.num_alive() == 5);
    CHECK(sub.num_edges() == 4);

    Graph all = induced_subgraph_by_radius(c6, 0, 3);
    CHECK(all.num_alive() == 6);
    CHECK(all.num_edges() == 6);

    Graph self = induced_subgraph_by_radius(c6, 0, 0);
    CHECK(self.num_alive() == 1);
    CHECK(self.num_edges() == 0);
}

TEST_CASE("bfs distance symmetry and triangle inequality on a random graph") {
    Rng rng(20240817);
    Graph g(24);
    for (VertexId u = 0; u < 24; ++u)
        for (VertexId v = u + 1; v < 24; ++v)
            if (rng.bernoulli(0.15)) g.add_edge(u, v);

    std::vector<std::vector<std::uint32_t>> dist;
    for (VertexId v = 0; v < 24; ++v) dist.push_back(bfs_distances(g, v));
    for (VertexId a = 0; a < 24; ++a)
        for (VertexId b = 0; b < 24; ++b) {
            CHECK(dist[a][b] == dist[b][a]);
            if (dist[a][b] == kUnreachable) continue;
            for (VertexId c = 0; c < 24; ++c) {
                if (dist[b][c] == kUnreachable || dist[a][c] == kUnreachable) continue;
                CHECK(dist[a][c] <= dist[a][b] + dist[b][c]);
            }
        }
}

TEST_CASE("remove then revive round-trips the graph") {
    Rng rng(7);
    Graph g(30);
    for (VertexId u = 0; u < 30; ++u)
        for (VertexId v = u + 1; v < 30; ++v)
            if (rng.bernoulli(0.2)) g.add_edge(u, v);
    const auto original_edges = g.alive_edges();

    std::vector<VertexId> order{4, 17, 2, 28, 11};
    for (VertexId v : order) g.remove_vertex(v);
    g.check_invariants();

    // revive in reverse removal order and restore every ledgered edge
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto rec = g.revive_vertex(*it);
        for (VertexId w : rec)
            if (g.is_alive(w)) g.add_edge(*it, w);
    }
    CHECK(g.alive_edges() == original_edges);
    g.check_invariants();
}

TEST_CASE("canonical key distinguishes edge sets and ignores history") {
    Graph a(3), b(3);
    a.add_edge(0, 1);
    b.add_edge(0, 1);
    b.add_edge(1, 2);
    CHECK(a.canonical_key() != b.canonical_key());
    b.remove_edge(1, 2);
    CHECK(a.canonical_key() == b.canonical_key());
}

TEST_CASE("component refs normalize and print") {
    auto e = ComponentRef::edge(7, 3);
    CHECK(e.u == 3);
    CHECK(e.v == 7);
    CHECK(e.str() == "e3-7");
    CHECK(ComponentRef::vertex(12).str() == "v12");
    CHECK(ComponentRef::edge(3, 7) == e);
    CHECK(ComponentRef::vertex(3) < ComponentRef::edge(3, 7));
}
