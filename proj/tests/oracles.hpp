// Independent reference implementations used to cross-check the library.
// Everything here is deliberately written the slow, obvious way with
// different algorithms than the production code (Floyd-Warshall instead of
// BFS, literal subset enumeration instead of branch and bound).
#pragma once

#include <optional>
#include <vector>

#include "gpgraph/graph.hpp"

namespace oracles {

// Floyd-Warshall all-pairs distances; -1 encodes unreachable.
std::vector<std::vector<int>> fw_distances(const gpgraph::Graph& g);

// Literal definition: no three members of s lie on a common shortest path,
// checked as a betweenness formula over all ordered triples.
bool is_gp_set(const std::vector<std::vector<int>>& d, const std::vector<int>& s);

// Anchored variant: s is a gp set, u is not in s, and no member sits on a
// shortest path from another member to u.
bool is_colinear_set(const std::vector<std::vector<int>>& d, int u, const std::vector<int>& s);

struct BruteResult {
    int value = 0;
    std::vector<int> witness;
};

// Exhaustive maximum over all subsets (n <= 24 keeps this sane).
BruteResult brute_gp(const gpgraph::Graph& g);
BruteResult brute_xi(const gpgraph::Graph& g, int u);

}  // namespace oracles
