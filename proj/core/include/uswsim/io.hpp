#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "uswsim/generators.hpp"
#include "uswsim/graph.hpp"

namespace uswsim {

// Edge-list format: optional '#' comment lines and blank lines anywhere,
// a "n m" header, then exactly m lines "u v" with 0 <= u,v < n. Throws
// ParseError (carrying the line number) on bad tokens, ids out of range,
// self loops, duplicate edges, or an edge-count mismatch.
Graph read_edge_list(std::istream& in);
Graph load_graph(const std::string& path);  // Error with path on unreadable file

// Writes the same format. The graph must have contiguous alive labels
// 0..n-1 (no removed vertices); throws GraphError otherwise.
void write_edge_list(const Graph& g, std::ostream& out);
void save_graph(const Graph& g, const std::string& path);

// Sidecar metadata lives next to the graph as "<path>.meta.json" and
// records family, parameters and seed so a later run (USW repair in
// particular) can recover the construction parameters.
std::string meta_path_for(const std::string& graph_path);
void save_meta(const GeneratorConfig& cfg, const std::string& graph_path);
// nullopt when no sidecar exists; ParseError when one exists but is bad.
std::optional<GeneratorConfig> load_meta(const std::string& graph_path);

// Doubles in CSV output all go through this: shortest round-trippable-ish
// fixed style so identical runs give byte-identical files.
std::string format_double(double x);

// FNV-1a over a string; used for config hashes in output headers.
std::uint64_t fnv1a64(std::string_view s);

}  // namespace uswsim
