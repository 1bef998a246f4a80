#pragma once

#include <string>
#include <vector>

#include "uswsim/graph.hpp"

namespace uswsim {

enum class CentralityKind { Degree, BetweennessVertex, BetweennessEdge, Closeness };

const char* centrality_name(CentralityKind k);

// Scores for every alive vertex (or every alive edge, for edge
// betweenness), sorted by component so output order is deterministic.
struct CentralityScores {
    CentralityKind kind = CentralityKind::Degree;
    std::vector<std::pair<ComponentRef, double>> scores;

    // Components whose score is within tol of the extreme. highest=false
    // picks the minimum instead.
    std::vector<ComponentRef> candidate_set(bool highest, double tol = 1e-9) const;
};

// degree(v) for every alive vertex.
CentralityScores degree_centrality(const Graph& g);

// Shortest-path betweenness over unordered vertex pairs (endpoints not
// counted), unnormalized. Works on disconnected graphs; pairs in
// different components contribute nothing.
CentralityScores betweenness_vertex(const Graph& g);

// Edge betweenness over unordered pairs; a pair's endpoints do count
// here, since their shortest paths cross edges.
CentralityScores betweenness_edge(const Graph& g);

// Classic closeness (n-1) / sum of distances. Throws DisconnectedInput
// when any pair of alive vertices is unreachable, since the sum is
// undefined there.
CentralityScores closeness_centrality(const Graph& g);

CentralityScores compute_centrality(const Graph& g, CentralityKind kind);

}  // namespace uswsim
