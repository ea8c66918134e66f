#pragma once

#include <cstdint>
#include <limits>

#include "gpgraph/collinearity.hpp"
#include "gpgraph/graph.hpp"

namespace gpgraph {

enum class BranchOrder { index, degree_descending };

struct SolverConfig {
    std::int64_t node_limit = std::numeric_limits<std::int64_t>::max();
    std::int64_t time_limit_ms = std::numeric_limits<std::int64_t>::max();
    BranchOrder branch_order = BranchOrder::index;
    bool seed_greedy = true;
    bool cover_bound = true;
};

struct SolveResult {
    int value = 0;
    VertexSet witness;
    bool optimal = false;
    std::int64_t nodes = 0;
    double ms = 0.0;
};

// Extreme of xi over all anchors, with the attaining vertex
// (smallest index on ties). nodes and ms aggregate all per-anchor solves.
struct VertexExtreme {
    int value = 0;
    int vertex = -1;
    bool optimal = false;
    std::int64_t nodes = 0;
    double ms = 0.0;
};

// Triple-test verifier: no three members on a common shortest path.
bool is_general_position(const CollinearityOracle& o, const VertexSet& s);
bool is_general_position(const Graph& g, const VertexSet& s);

// Structural verifier: components of the induced subgraph are cliques
// whose partition is distance-constant and in-transitive.
bool is_general_position_characterized(const Graph& g, const VertexSet& s);

// General position, u outside s, and no member inside the interval from
// another member to u.
bool is_u_colinear_set(const CollinearityOracle& o, int u, const VertexSet& s);
bool is_u_colinear_set(const Graph& g, int u, const VertexSet& s);

// Largest general position set, exact branch and bound. Limit-exceeded
// runs return best-so-far with optimal=false.
SolveResult max_gp(const Graph& g, const SolverConfig& cfg = {});
SolveResult max_gp(const Graph& g, const CollinearityOracle& o, const SolverConfig& cfg = {});

// Largest u-colinear set.
SolveResult xi(const Graph& g, int u, const SolverConfig& cfg = {});
SolveResult xi(const Graph& g, const CollinearityOracle& o, int u, const SolverConfig& cfg = {});

VertexExtreme xi_minus(const Graph& g, const SolverConfig& cfg = {});
VertexExtreme xi_max(const Graph& g, const SolverConfig& cfg = {});

// xi(G1,u1) + xi(G2,u2) over the components of G-e for a bridge e=(u1,u2)
// whose endpoints both have degree >= 2. Always a lower bound on gp(G).
int bridge_lower_bound(const Graph& g, Edge e, const SolverConfig& cfg = {});

// Simplicial-vertex count; equals gp on block graphs.
int gp_block_graph(const Graph& g);

}  // namespace gpgraph
