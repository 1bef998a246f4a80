#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uswsim/centrality.hpp"
#include "uswsim/graph.hpp"
#include "uswsim/rng.hpp"

namespace uswsim {

enum class Extremal { Low, High };

// Attack profile token [DBC]-[EV]-[LH], e.g. "B-E-H": which centrality
// to rank by, whether vertices or edges get removed, and which end of
// the ranking to shoot at. Degree and closeness only come in vertex
// flavors.
struct AttackProfile {
    CentralityKind measure = CentralityKind::Degree;
    ComponentRef::Kind component = ComponentRef::Kind::Vertex;
    Extremal extremal = Extremal::High;

    std::string token() const;
    static AttackProfile parse(std::string_view s);  // throws InvalidProfile

    friend bool operator==(const AttackProfile&, const AttackProfile&) = default;
};

// The eight valid profiles in token order D-V-*, B-V-*, B-E-*, C-V-*.
std::vector<AttackProfile> all_profiles();

// Components tied (within tol, absolute) for the profile's extremal
// score, in ascending component order. Throws GraphError on an empty
// graph; closeness profiles throw DisconnectedInput on disconnected input.
std::vector<ComponentRef> candidate_set(const Graph& g, const AttackProfile& profile,
                                        double tol = 1e-9);

// Removes one uniformly chosen candidate and returns it. Centrality is
// recomputed from the current graph state on every call.
ComponentRef attack_shot(Graph& g, const AttackProfile& profile, Rng& rng, double tol = 1e-9);

void remove_component(Graph& g, const ComponentRef& c);

// Fires until the graph disconnects and returns the number of shots.
// Throws ShotLimitExceeded (carrying the count) when shot_limit runs out,
// or when a vertex profile is down to one alive vertex, with the graph
// still connected. Throws DisconnectedInput if it starts disconnected.
std::size_t attack_until_disconnected(Graph& g, const AttackProfile& profile, Rng& rng,
                                      std::size_t shot_limit, double tol = 1e-9);

struct EfficacyLimits {
    std::size_t max_unique_graphs = 500000;
    // Per-path removal budget. 0 = the natural exhaustion bound: alive
    // vertex count for vertex profiles, edge count for edge profiles.
    std::size_t max_depth = 0;
};

struct EfficacyStats {
    std::size_t unique_graphs = 0;  // distinct end states reached
    std::size_t min_depth = 0;
    std::size_t max_depth = 0;
    double mean_depth = 0.0;
    double stddev_depth = 0.0;  // sample stddev over end states, 0 for a single one
    bool truncated = false;
    std::size_t states_seen = 0;  // all distinct states, interior ones included
};

// Exhaustive recursion: at every connected state, branch over every
// member of candidate_set; states are deduplicated by canonical key
// (labels are stable, so no isomorphism testing). An end state is a
// disconnected graph, or a single surviving vertex for vertex profiles.
// Depth = components removed along the way, a function of the state
// itself. truncated is set when either limit cuts the exploration short.
EfficacyStats recursive_efficacy(const Graph& g, const AttackProfile& profile,
                                 const EfficacyLimits& limits = {}, double tol = 1e-9);

// Reporting aid: how many vertices sit within pl hops of a vertex in a
// degree-regular view, 1 + sum_{i=1..pl} d*(d-1)^(i-1). Capped at n when
// a graph size is supplied.
double attacker_reach(double avg_degree, std::uint32_t pl,
                      std::optional<std::size_t> n = std::nullopt);

}  // namespace uswsim
