#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uswsim/graph.hpp"
#include "uswsim/rng.hpp"

namespace uswsim {

enum class Family { Random, PowerLaw, SmallWorld, Usw };

// Short tokens used on the command line and in metadata: er, pl, ws, usw.
const char* family_token(Family f);
Family parse_family(std::string_view token);  // throws ParseError

// Control parameters of the unsupervised-small-world process. beta is the
// threshold a locally drawn random number must exceed for an edge to form;
// gamma is the fraction of the failed/never-considered list reused after a
// success. t and l_repair only matter to the repair policy: t is the
// fraction of the alive graph sampled as a candidate pool, l_repair how
// many nodes run a walk per repair turn. alpha is carried around opaquely
// for forward compatibility; nothing reads it.
struct UswParams {
    double beta = 0.95;
    double gamma = 0.95;
    double t = 0.10;
    std::size_t l_repair = 10;
    std::optional<double> alpha;

    friend bool operator==(const UswParams&, const UswParams&) = default;
};

struct GeneratorConfig {
    Family family = Family::Random;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    double p = 0.0;            // Random: edge probability; SmallWorld: rewire probability
    std::size_t m_attach = 1;  // PowerLaw: edges per new vertex
    std::size_t k = 4;         // SmallWorld: ring degree, even
    UswParams usw;             // Usw
    std::size_t max_retries = 100;

    void validate() const;  // throws Error on out-of-range parameters

    friend bool operator==(const GeneratorConfig&, const GeneratorConfig&) = default;
};

// Dispatches to the family routine below and retries with derived
// sub-seeds until the result is connected. Throws RetryExhausted after
// config.max_retries failed attempts (parameters too sparse).
Graph generate(const GeneratorConfig& config);

// Single attempts; may return a disconnected graph (generate() handles
// the retry loop).
Graph generate_random(std::size_t n, double p, Rng& rng);
Graph generate_power_law(std::size_t n, std::size_t m_attach, Rng& rng);
Graph generate_small_world(std::size_t n, std::size_t k, double p, Rng& rng);
// Connected by construction: every node walks until it has an edge.
Graph generate_usw(std::size_t n, const UswParams& params, Rng& rng);

struct UswWalkStats {
    std::size_t attempted = 0;  // add_edge calls, duplicates included
    std::size_t added = 0;      // edges actually created
};

// One local attachment walk for `node`, restricted to `pool` (existing
// alive vertices, node excluded). Picks a uniform entry from the pool,
// walks breadth-first over pool members with a visit cap of
// ceil(sqrt(|pool|)) + 5, and forms edges per beta/gamma. `failed` is the
// node's running failed-or-never-considered list, updated in place.
// added == 0 means the walk found no takers. Never consults anything
// global: only neighbor sets of visited vertices.
UswWalkStats usw_attach_walk(Graph& g, VertexId node, const std::vector<VertexId>& pool,
                             const UswParams& params, std::vector<VertexId>& failed, Rng& rng,
                             std::vector<VertexId>* visited_out = nullptr);

}  // namespace uswsim
