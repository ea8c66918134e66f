#pragma once

#include <cstdint>
#include <vector>

#include "gpgraph/graph.hpp"

namespace gpgraph {

// f : V(G) -> V(H), entry g holds f(g).
struct VertexMap {
    std::vector<int> values;

    bool operator==(const VertexMap&) const = default;
    bool operator<(const VertexMap& o) const { return values < o.values; }
};

VertexMap constant_map(int g_order, int target);
VertexMap identity_map(int g_order);
bool is_injective(const VertexMap& f);

// Product of G and H under f: one copy of H per vertex of G, plus one
// connecting edge (g,f(g')) -- (g',f(g)) per edge gg' of G.
struct ProductGraph {
    Graph graph;
    int g_dim = 0;
    int h_dim = 0;
    VertexMap map;
    std::vector<Edge> connecting;  // flat-index pairs, normalized and sorted

    int flat(int g, int h) const { return g * h_dim + h; }
    std::pair<int, int> unflat(int v) const { return {v / h_dim, v % h_dim}; }
};

ProductGraph build_product(const Graph& g, const Graph& h, const VertexMap& f);

// Flat indices of copy gH.
VertexSet copy_vertices(const ProductGraph& p, int g);

// Partitions of m into at most max_parts positive parts, each written in
// non-increasing order, listed reverse-lexicographically (largest first
// part first).
std::vector<std::vector<int>> integer_partitions(int m, int max_parts);

// Random-access enumeration of maps f in H^G.
//
//   full      all n(H)^n(G) maps in lexicographic order (f(0) most
//             significant); refused when the space exceeds 2^62.
//   symmetry  one representative per orbit of Aut(G) x Aut(H); only valid
//             when both factors are complete, where orbits correspond to
//             partitions of n(G) into at most n(H) parts and the
//             representative is the non-decreasing-target map 0^k1 1^k2 ...
//   capped    first `cap` maps of full order, plus all constant maps and
//             the identity injective map (when n(H) >= n(G)) if not
//             already among them.
class MapEnumeration {
public:
    enum class Mode { full, symmetry, capped };

    static MapEnumeration full(int g_order, int h_order);
    static MapEnumeration symmetry(const Graph& g, const Graph& h);
    static MapEnumeration capped(int g_order, int h_order, std::int64_t cap);

    Mode mode() const { return mode_; }
    std::int64_t count() const { return count_; }
    VertexMap at(std::int64_t i) const;

    // True when every map of H^G is covered (directly or via symmetry).
    bool exhaustive() const { return exhaustive_; }

private:
    MapEnumeration() = default;

    Mode mode_ = Mode::full;
    int g_order_ = 0;
    int h_order_ = 0;
    std::int64_t count_ = 0;
    bool exhaustive_ = false;
    std::int64_t prefix_ = 0;                    // capped: leading block of full order
    std::vector<VertexMap> extra_;               // capped: deduplicated mandatory maps
    std::vector<std::vector<int>> partitions_;   // symmetry mode
};

}  // namespace gpgraph
