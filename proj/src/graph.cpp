#include "gpgraph/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpgraph {

Graph build_graph(int n, const std::vector<Edge>& edges, BuildMode mode) {
    if (n < 1) throw std::invalid_argument("build_graph: order must be >= 1");

    Graph g;
    g.n_ = n;
    g.rows_.assign(static_cast<std::size_t>(n), VertexSet(n));

    std::vector<Edge> norm;
    norm.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("build_graph: edge endpoint out of range");
        if (a == b) throw std::invalid_argument("build_graph: self-loop");
        if (a > b) std::swap(a, b);
        if (g.rows_[static_cast<std::size_t>(a)].test(b)) {
            if (mode == BuildMode::strict)
                throw std::invalid_argument("build_graph: duplicate edge (" +
                                            std::to_string(a) + "," + std::to_string(b) + ")");
            continue;
        }
        g.rows_[static_cast<std::size_t>(a)].set(b);
        g.rows_[static_cast<std::size_t>(b)].set(a);
        norm.emplace_back(a, b);
    }
    std::sort(norm.begin(), norm.end());
    g.edges_ = std::move(norm);

    g.connected_ = component_of(g, 0).count() == n;
    if (mode == BuildMode::strict && !g.connected_)
        throw std::invalid_argument("build_graph: graph is not connected");
    return g;
}

Graph with_labels(Graph g, std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != g.order())
        throw std::invalid_argument("with_labels: label count != order");
    g.labels_ = std::move(labels);
    return g;
}

VertexSet component_of(const Graph& g, int start) {
    if (start < 0 || start >= g.order())
        throw std::out_of_range("component_of: start out of range");
    VertexSet seen(g.order());
    std::vector<int> queue{start};
    seen.set(start);
    while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        g.neighbors(u).for_each([&](int v) {
            if (!seen.test(v)) {
                seen.set(v);
                queue.push_back(v);
            }
        });
    }
    return seen;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet remaining = VertexSet::full(g.order());
    while (!remaining.empty()) {
        VertexSet comp = component_of(g, remaining.first());
        remaining -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vs, BuildMode mode) {
    if (vs.universe() != g.order())
        throw std::invalid_argument("induced_subgraph: universe mismatch");
    if (vs.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");

    InducedSubgraph out;
    out.to_parent = vs.to_vector();
    out.from_parent.assign(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < out.to_parent.size(); ++i)
        out.from_parent[static_cast<std::size_t>(out.to_parent[i])] = static_cast<int>(i);

    std::vector<Edge> edges;
    for (auto [a, b] : g.edges()) {
        if (vs.test(a) && vs.test(b))
            edges.emplace_back(out.from_parent[static_cast<std::size_t>(a)],
                               out.from_parent[static_cast<std::size_t>(b)]);
    }
    out.graph = build_graph(static_cast<int>(out.to_parent.size()), edges, mode);

    if (!g.labels().empty()) {
        std::vector<std::string> labels;
        labels.reserve(out.to_parent.size());
        for (int v : out.to_parent) labels.push_back(g.labels()[static_cast<std::size_t>(v)]);
        out.graph = with_labels(std::move(out.graph), std::move(labels));
    }
    return out;
}

}  // namespace gpgraph
