#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gpgraph/vertex_set.hpp"

namespace gpgraph {

using Edge = std::pair<int, int>;

// strict: reject duplicate edges and disconnected graphs.
// relaxed: silently drop duplicates, allow disconnected graphs.
// Self-loops and out-of-range endpoints are rejected in both modes.
enum class BuildMode { strict, relaxed };

// Simple undirected graph, immutable after construction.
class Graph {
public:
    Graph() = default;

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].test(v); }
    int degree(int u) const { return rows_[static_cast<std::size_t>(u)].count(); }
    const VertexSet& neighbors(int u) const { return rows_[static_cast<std::size_t>(u)]; }

    // Edges normalized to (min,max), sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }

    bool connected() const { return connected_; }

    // Optional display names; empty when unset.
    const std::vector<std::string>& labels() const { return labels_; }

    friend Graph build_graph(int n, const std::vector<Edge>& edges, BuildMode mode);
    friend Graph with_labels(Graph g, std::vector<std::string> labels);

private:
    int n_ = 0;
    std::vector<VertexSet> rows_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    bool connected_ = false;
};

Graph build_graph(int n, const std::vector<Edge>& edges, BuildMode mode = BuildMode::strict);
Graph with_labels(Graph g, std::vector<std::string> labels);

// Vertices reachable from start.
VertexSet component_of(const Graph& g, int start);

// All connected components, each as a vertex set, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;  // new index -> original vertex
    std::vector<int> from_parent;  // original vertex -> new index, -1 if absent
};

// Subgraph induced by `vs`, vertices renumbered in increasing original order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vs,
                                 BuildMode mode = BuildMode::relaxed);

}  // namespace gpgraph
