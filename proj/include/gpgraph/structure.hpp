#pragma once

#include <vector>

#include "gpgraph/graph.hpp"

namespace gpgraph {

// Bridges (cut edges), normalized (min,max) and sorted.
std::vector<Edge> bridges(const Graph& g);

// Vertices whose neighborhood induces a clique.
VertexSet simplicial_vertices(const Graph& g);

// Biconnected components as vertex sets. Isolated vertices form their own
// block; every edge belongs to exactly one block.
std::vector<VertexSet> blocks(const Graph& g);

// True when every block induces a clique.
bool is_block_graph(const Graph& g);

bool is_tree(const Graph& g);
bool is_complete(const Graph& g);

// Degree-1 vertices.
VertexSet leaves(const Graph& g);

}  // namespace gpgraph
