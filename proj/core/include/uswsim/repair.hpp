#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "uswsim/generators.hpp"
#include "uswsim/graph.hpp"
#include "uswsim/rng.hpp"

namespace uswsim {

enum class RepairKind { Standard, Usw };

struct RepairPolicy {
    RepairKind kind = RepairKind::Standard;
    // Standard: share of the removed-vertex ledger reactivated per turn
    // (rounded up), and the per-edge probability that a reattachment
    // attempt succeeds.
    double reactivation_fraction = 0.10;
    double attempt_success_prob = 0.90;
    // Usw: walk parameters; t and l_repair drive pool size and node count.
    // Must be present for RepairKind::Usw (comes from the graph's sidecar).
    std::optional<UswParams> usw;
};

struct RepairReport {
    std::size_t vertices_restored = 0;
    std::size_t edges_attempted = 0;
    std::size_t edges_restored = 0;
};

// Test instrument: what a repair turn looked at, so tests can assert
// Alice stayed local. allowed is the set she was entitled to know about
// (ledger members for Standard, sampled pools for Usw), consulted is
// everything the policy actually touched.
struct RepairTrace {
    RepairKind kind = RepairKind::Standard;
    bool consulted_centrality = false;  // never set by the real policies
    std::vector<VertexId> allowed;
    std::vector<VertexId> consulted;
};

// True iff the trace used no centrality and consulted only allowed
// vertices.
bool locality_audit(const RepairTrace& trace);

// Reactivates ceil(reactivation_fraction * |ledger|) uniformly chosen
// removed vertices, then tries to restore each of their original edges
// whose other endpoint is alive, each with attempt_success_prob. Two
// phases (revive all picks first, then relink), so vertices revived in
// the same turn can reconnect to each other.
RepairReport repair_turn_standard(Graph& g, const RepairPolicy& policy, Rng& rng,
                                  RepairTrace* trace = nullptr);

// Picks min(l_repair, alive) nodes uniformly; each runs one attachment
// walk (stored beta/gamma) restricted to its own uniformly sampled
// ceil(t * alive)-size pool. Adds edges only, never vertices. Throws
// MissingUswParams when policy.usw is empty.
RepairReport repair_turn_usw(Graph& g, const RepairPolicy& policy, Rng& rng,
                             RepairTrace* trace = nullptr);

// Dispatch on policy.kind.
RepairReport repair_turn(Graph& g, const RepairPolicy& policy, Rng& rng,
                         RepairTrace* trace = nullptr);

}  // namespace uswsim
