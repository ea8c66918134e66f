#pragma once

#include <string>
#include <vector>

#include "gpgraph/graph.hpp"

namespace gpgraph {

// graph6 ASCII encoding: 6-bit groups offset by 63, upper-triangle bits in
// column order. Accepts an optional ">>graph6<<" prefix and trailing
// whitespace; rejects anything else malformed. Relaxed build (disconnected
// inputs are representable).
Graph parse_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

// One graph per non-empty line.
std::vector<Graph> parse_graph6_lines(const std::string& text);

// {"n": int, "edges": [[u,v],...], "labels": [...]} with labels optional.
Graph parse_graph_json(const std::string& text);
std::string write_graph_json(const Graph& g);

// Undirected DOT; members of `highlight` are drawn filled.
std::string to_dot(const Graph& g, const VertexSet& highlight);
std::string to_dot(const Graph& g);

}  // namespace gpgraph
