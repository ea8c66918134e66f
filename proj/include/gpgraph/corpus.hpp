#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gpgraph/graph.hpp"

namespace gpgraph {

// All isomorphism classes of simple graphs on exactly n vertices (n <= 7),
// one canonical representative each, in a deterministic order.
std::vector<Graph> all_graphs_upto_iso(int n);

// The connected classes only.
std::vector<Graph> connected_graphs_upto_iso(int n);

// Random tree plus independent extra edges with probability edge_prob;
// always connected.
Graph random_connected_graph(int n, double edge_prob, std::mt19937_64& rng);

// Connected block graph grown by attaching random cliques at random
// vertices; order lands in [n_target, n_target+3).
Graph random_block_graph(int n_target, std::mt19937_64& rng);

// Mixed corpus of `count` connected graphs with 4 <= n <= max_n, seeded and
// deterministic: trees, sparse and dense random graphs, cycles, completes.
std::vector<Graph> random_corpus(int count, int max_n, std::uint64_t seed);

}  // namespace gpgraph
