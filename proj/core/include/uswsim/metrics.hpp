#pragma once

#include <cstdint>

#include "uswsim/graph.hpp"

namespace uswsim {

// Mean of 1/d(u,v) over unordered alive pairs, with 1/inf = 0 for
// unreachable pairs. Defined on disconnected graphs; throws DomainError
// if fewer than 2 vertices are alive.
double avg_inverse_path_length(const Graph& g);

// Same quantity normalized over ordered pairs; numerically identical.
double global_efficiency(const Graph& g);

// Mean distance over unordered pairs inside the largest component.
// Throws DomainError if that component has fewer than 2 vertices.
double avg_path_length(const Graph& g);

// Global transitivity: 3 * triangles / connected triples. 0 when there
// are no triples. Counts on the whole alive graph.
double clustering_coefficient(const Graph& g);

// m / C(n,2) over the largest component; 0 when it has fewer than 2
// vertices.
double density(const Graph& g);

// Longest shortest path inside the largest component. Throws DomainError
// when nothing is alive.
std::uint32_t diameter(const Graph& g);

// |largest component| / alive vertices. 1.0 means intact, smaller means
// the graph has shed vertices from its main body. Throws DomainError on
// an empty graph.
double damage_ratio(const Graph& g);

// Everything above in one pass, for per-turn CSV rows. Values whose
// metric is undefined on the current graph come back as 0 rather than
// throwing, so a row can always be written.
struct MetricsSnapshot {
    std::size_t n_alive = 0;
    std::size_t m_alive = 0;
    std::size_t lcc_size = 0;
    double avg_inverse_path_length = 0.0;
    double avg_path_length = 0.0;
    double clustering = 0.0;
    double density = 0.0;
    std::uint32_t diameter = 0;
    double damage_ratio = 0.0;
    double global_efficiency = 0.0;
};

MetricsSnapshot take_snapshot(const Graph& g);

}  // namespace uswsim
