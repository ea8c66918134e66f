#include "gpgraph/distance.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace gpgraph {

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.order();
    DistanceMatrix m;
    m.n_ = n;
    m.d_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);

    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        int* row = m.d_.data() + static_cast<std::size_t>(s) * static_cast<std::size_t>(n);
        queue.clear();
        queue.push_back(s);
        row[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            g.neighbors(u).for_each([&](int v) {
                if (row[v] < 0) {
                    row[v] = row[u] + 1;
                    queue.push_back(v);
                }
            });
        }
    }
    return m;
}

int DistanceMatrix::diameter() const {
    int best = 0;
    for (int v : d_) best = std::max(best, v);
    return best;
}

bool in_interval(const DistanceMatrix& d, int a, int b, int w) {
    int dab = d.at(a, b);
    int daw = d.at(a, w);
    int dwb = d.at(w, b);
    if (dab < 0 || daw < 0 || dwb < 0) return false;
    return daw + dwb == dab;
}

bool is_convex_subset(const Graph& g, const DistanceMatrix& d, const VertexSet& s) {
    if (s.universe() != g.order())
        throw std::invalid_argument("is_convex_subset: universe mismatch");
    auto members = s.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            for (int w = 0; w < g.order(); ++w) {
                if (s.test(w)) continue;
                if (in_interval(d, members[i], members[j], w)) return false;
            }
        }
    }
    return true;
}

bool is_convex_subset(const Graph& g, const VertexSet& s) {
    return is_convex_subset(g, all_pairs_distances(g), s);
}

bool is_isometric_subset(const Graph& g, const DistanceMatrix& d, const VertexSet& s) {
    if (s.universe() != g.order())
        throw std::invalid_argument("is_isometric_subset: universe mismatch");
    if (s.empty()) return true;
    auto sub = induced_subgraph(g, s, BuildMode::relaxed);
    DistanceMatrix ds = all_pairs_distances(sub.graph);
    const int k = sub.graph.order();
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (ds.at(i, j) != d.at(sub.to_parent[static_cast<std::size_t>(i)],
                                    sub.to_parent[static_cast<std::size_t>(j)]))
                return false;
    return true;
}

bool is_isometric_subset(const Graph& g, const VertexSet& s) {
    return is_isometric_subset(g, all_pairs_distances(g), s);
}

}  // namespace gpgraph
