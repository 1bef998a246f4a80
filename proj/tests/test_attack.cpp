#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "uswsim/attack.hpp"
#include "uswsim/errors.hpp"
#include "uswsim/generators.hpp"
#include "uswsim/io.hpp"

using namespace uswsim;

namespace {

Graph star(std::size_t leaves) {
    Graph g(leaves + 1);
    for (VertexId i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph cycle(std::size_t n) {
    Graph g(n);
    for (VertexId i = 0; i < n; ++i) g.add_edge(i, static_cast<VertexId>((i + 1) % n));
    return g;
}

Graph complete(std::size_t n) {
    Graph g(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path(std::size_t n) {
    Graph g(n);
    for (VertexId i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph random_tree(std::size_t n, Rng& rng) {
    Graph g(n);
    for (VertexId v = 1; v < n; ++v) g.add_edge(v, static_cast<VertexId>(rng.uniform_int(v)));
    return g;
}

Graph sample10() {
    return load_graph(std::string(USWSIM_TEST_DATA_DIR) + "/sample10.edges");
}

}  // namespace

TEST_CASE("profile tokens parse and print") {
    auto p = AttackProfile::parse("B-V-H");
    CHECK(p.measure == CentralityKind::BetweennessVertex);
    CHECK(p.component == ComponentRef::Kind::Vertex);
    CHECK(p.extremal == Extremal::High);
    CHECK(p.token() == "B-V-H");

    auto q = AttackProfile::parse("C-V-L");
    CHECK(q.measure == CentralityKind::Closeness);
    CHECK(q.extremal == Extremal::Low);

    auto r = AttackProfile::parse("B-E-H");
    CHECK(r.measure == CentralityKind::BetweennessEdge);
    CHECK(r.component == ComponentRef::Kind::Edge);

    CHECK_THROWS_AS(AttackProfile::parse("D-E-L"), InvalidProfile);
    CHECK_THROWS_AS(AttackProfile::parse("C-E-H"), InvalidProfile);
    CHECK_THROWS_AS(AttackProfile::parse("BVH"), InvalidProfile);
    CHECK_THROWS_AS(AttackProfile::parse("X-V-H"), InvalidProfile);
    CHECK_THROWS_AS(AttackProfile::parse("B-V-Q"), InvalidProfile);
    CHECK_THROWS_AS(AttackProfile::parse(""), InvalidProfile);
}

TEST_CASE("exactly eight valid profiles exist") {
    auto all = all_profiles();
    CHECK(all.size() == 8);
    std::set<std::string> tokens;
    for (const auto& p : all) tokens.insert(p.token());
    CHECK(tokens.size() == 8);
    CHECK(tokens.count("D-V-H") == 1);
    CHECK(tokens.count("B-E-L") == 1);
    CHECK(tokens.count("D-E-H") == 0);
}

TEST_CASE("candidate sets on hand graphs") {
    auto dvh = candidate_set(star(4), AttackProfile::parse("D-V-H"));
    REQUIRE(dvh.size() == 1);
    CHECK(dvh[0] == ComponentRef::vertex(0));

    auto c5 = candidate_set(cycle(5), AttackProfile::parse("B-V-H"));
    CHECK(c5.size() == 5);  // vertex-transitive, everything ties

    auto beh = candidate_set(path(3), AttackProfile::parse("B-E-H"));
    REQUIRE(beh.size() == 2);
    CHECK(beh[0] == ComponentRef::edge(0, 1));
    CHECK(beh[1] == ComponentRef::edge(1, 2));

    Graph empty;
    CHECK_THROWS_AS(candidate_set(empty, AttackProfile::parse("D-V-H")), GraphError);
}

TEST_CASE("attack_shot removes what it says it removed") {
    Rng rng(1);
    Graph s4 = star(3);
    auto removed = attack_shot(s4, AttackProfile::parse("D-V-H"), rng);
    CHECK(removed == ComponentRef::vertex(0));
    CHECK_FALSE(is_connected(s4));

    Graph p2 = path(2);
    removed = attack_shot(p2, AttackProfile::parse("B-E-H"), rng);
    CHECK(removed == ComponentRef::edge(0, 1));
    CHECK_FALSE(is_connected(p2));
}

TEST_CASE("removed vertex keeps its full incident set in the ledger") {
    Rng rng(2);
    Graph g = sample10();
    auto removed = attack_shot(g, AttackProfile::parse("D-V-H"), rng);
    REQUIRE(removed.kind == ComponentRef::Kind::Vertex);
    const auto& rec = g.removed_ledger().at(removed.u);
    CHECK(rec.size() == 5);  // both hubs have degree 5 in the shipped graph
}

TEST_CASE("tied candidates are chosen uniformly") {
    // 1000 one-shot games on a fresh C10; all ten vertices tie every time
    const auto profile = AttackProfile::parse("D-V-H");
    int counts[10] = {};
    for (int i = 0; i < 1000; ++i) {
        Rng rng(derive_seed(31415, static_cast<std::uint64_t>(i)));
        Graph g = cycle(10);
        auto removed = attack_shot(g, profile, rng);
        ++counts[removed.u];
    }
    double chi2 = 0.0;
    for (int c : counts) chi2 += (c - 100.0) * (c - 100.0) / 100.0;
    CHECK(chi2 < 27.88);  // chi-square 0.999 quantile at 9 dof
}

TEST_CASE("attack_until_disconnected basics") {
    Rng rng(3);
    Graph p2 = path(2);
    CHECK(attack_until_disconnected(p2, AttackProfile::parse("B-E-H"), rng, 100) == 1);

    Graph disc(4);
    disc.add_edge(0, 1);
    CHECK_THROWS_AS(attack_until_disconnected(disc, AttackProfile::parse("D-V-H"), rng, 10),
                    DisconnectedInput);
}

TEST_CASE("every tree dies to its first highest-betweenness edge shot") {
    Rng rng(4);
    for (int trial = 0; trial < 25; ++trial) {
        Graph t = random_tree(2 + rng.uniform_int(49), rng);
        CHECK(attack_until_disconnected(t, AttackProfile::parse("B-E-H"), rng, 10) == 1);
    }
}

TEST_CASE("complete graphs never disconnect; the shot limit reports the count") {
    Rng rng(5);
    Graph k4 = complete(4);
    try {
        attack_until_disconnected(k4, AttackProfile::parse("D-V-L"), rng, 100);
        FAIL("expected ShotLimitExceeded");
    } catch (const ShotLimitExceeded& e) {
        // three removals take K4 to a lone (still connected) vertex
        CHECK(e.shots_taken() == 3);
    }
    CHECK(k4.num_alive() == 1);
}

TEST_CASE("removal sequences are deterministic in the seed") {
    auto run = [](std::uint64_t seed) {
        Rng rng(seed);
        Graph g = sample10();
        std::vector<std::string> seq;
        for (int i = 0; i < 6; ++i) seq.push_back(attack_shot(g, AttackProfile::parse("B-V-L"), rng).str());
        return seq;
    };
    CHECK(run(7) == run(7));
    CHECK(run(7) != run(8));  // 8 tied low-score vertices; collision odds are negligible
}

TEST_CASE("recursive efficacy on trivial graphs") {
    auto p2 = recursive_efficacy(path(2), AttackProfile::parse("B-E-H"));
    CHECK(p2.unique_graphs == 1);
    CHECK(p2.min_depth == 1);
    CHECK(p2.max_depth == 1);
    CHECK(p2.mean_depth == doctest::Approx(1.0));
    CHECK(p2.stddev_depth == 0.0);
    CHECK_FALSE(p2.truncated);

    auto s4 = recursive_efficacy(star(3), AttackProfile::parse("D-V-H"));
    CHECK(s4.unique_graphs == 1);  // unique center, one branch
    CHECK(s4.max_depth == 1);
}

TEST_CASE("efficacy high-vs-low pattern on the shipped graph") {
    Graph g = sample10();
    const char* pairs[][2] = {
        {"D-V-H", "D-V-L"}, {"B-V-H", "B-V-L"}, {"B-E-H", "B-E-L"}, {"C-V-H", "C-V-L"}};
    for (auto [high, low] : pairs) {
        auto h = recursive_efficacy(g, AttackProfile::parse(high));
        auto l = recursive_efficacy(g, AttackProfile::parse(low));
        CHECK_FALSE(h.truncated);
        CHECK_FALSE(l.truncated);
        CHECK(h.mean_depth < l.mean_depth);
        // every H path is strictly shallower than every L path here
        CHECK(h.max_depth <= l.min_depth);
    }
}

TEST_CASE("efficacy invariants on the shipped graph") {
    Graph g = sample10();
    for (const auto& p : all_profiles()) {
        auto st = recursive_efficacy(g, p);
        CHECK(st.unique_graphs >= 1);
        CHECK(st.min_depth <= st.mean_depth);
        CHECK(st.mean_depth <= st.max_depth);
    }
}

TEST_CASE("efficacy truncates at the unique-graph budget") {
    Graph g = sample10();
    EfficacyLimits lim;
    lim.max_unique_graphs = 3;
    auto st = recursive_efficacy(g, AttackProfile::parse("D-V-L"), lim);
    CHECK(st.truncated);
    CHECK(st.unique_graphs == 3);  // full run finds 10
}

TEST_CASE("efficacy depth limit prunes long paths only") {
    Graph g = sample10();
    EfficacyLimits lim;
    lim.max_depth = 4;
    auto high = recursive_efficacy(g, AttackProfile::parse("B-E-H"), lim);
    CHECK_FALSE(high.truncated);  // finishes at depth 1, far below the cap
    auto low = recursive_efficacy(g, AttackProfile::parse("B-E-L"), lim);
    CHECK(low.truncated);  // needs depth 13
    CHECK(low.unique_graphs == 0);
}

TEST_CASE("attacker reach sums the expansion estimate") {
    CHECK(attacker_reach(2.0, 0) == doctest::Approx(1.0));
    CHECK(attacker_reach(3.0, 2) == doctest::Approx(10.0));
    CHECK(attacker_reach(3.0, 2, std::size_t{6}) == doctest::Approx(6.0));  // capped
    CHECK(attacker_reach(2.0, 3) == doctest::Approx(7.0));  // 1 + 2 + 2 + 2
}
