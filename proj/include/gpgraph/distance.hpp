#pragma once

#include <vector>

#include "gpgraph/graph.hpp"

namespace gpgraph {

// Dense all-pairs shortest-path distances (hop counts). -1 between
// vertices in different components.
class DistanceMatrix {
public:
    DistanceMatrix() = default;

    int order() const { return n_; }

    int at(int u, int v) const {
        return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(v)];
    }

    // Largest finite distance (0 for a single vertex).
    int diameter() const;

    friend DistanceMatrix all_pairs_distances(const Graph& g);

private:
    int n_ = 0;
    std::vector<int> d_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

// True when w lies on some shortest a,b-path (endpoints included).
bool in_interval(const DistanceMatrix& d, int a, int b, int w);

// True when no vertex outside `s` lies on a shortest path between two
// members of `s`.
bool is_convex_subset(const Graph& g, const DistanceMatrix& d, const VertexSet& s);
bool is_convex_subset(const Graph& g, const VertexSet& s);

// True when distances inside the induced subgraph equal distances in g
// for every pair of members.
bool is_isometric_subset(const Graph& g, const DistanceMatrix& d, const VertexSet& s);
bool is_isometric_subset(const Graph& g, const VertexSet& s);

}  // namespace gpgraph
