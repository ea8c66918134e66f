#include "gpgraph/structure.hpp"

#include <algorithm>

namespace gpgraph {

namespace {

// Shared DFS state for bridges / biconnected components.
struct LowLink {
    const Graph& g;
    std::vector<int> disc, low;
    int timer = 0;
    std::vector<Edge> bridge_list;
    std::vector<Edge> edge_stack;
    std::vector<VertexSet> block_list;

    explicit LowLink(const Graph& graph)
        : g(graph),
          disc(static_cast<std::size_t>(graph.order()), -1),
          low(static_cast<std::size_t>(graph.order()), -1) {}

    void pop_block(const Edge& until) {
        VertexSet b(g.order());
        while (!edge_stack.empty()) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            b.set(e.first);
            b.set(e.second);
            if (e == until) break;
        }
        block_list.push_back(std::move(b));
    }

    void dfs(int u, int parent) {
        disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
        bool skipped_parent = false;  // parallel edges are impossible, one skip suffices
        g.neighbors(u).for_each([&](int v) {
            if (v == parent && !skipped_parent) {
                skipped_parent = true;
                return;
            }
            if (disc[static_cast<std::size_t>(v)] < 0) {
                Edge e{std::min(u, v), std::max(u, v)};
                edge_stack.push_back(e);
                dfs(v, u);
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(v)]);
                if (low[static_cast<std::size_t>(v)] > disc[static_cast<std::size_t>(u)])
                    bridge_list.push_back(e);
                if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(u)])
                    pop_block(e);
            } else if (disc[static_cast<std::size_t>(v)] < disc[static_cast<std::size_t>(u)]) {
                edge_stack.push_back({std::min(u, v), std::max(u, v)});
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(v)]);
            }
        });
    }

    void run() {
        for (int s = 0; s < g.order(); ++s) {
            if (disc[static_cast<std::size_t>(s)] >= 0) continue;
            dfs(s, -1);
            if (g.degree(s) == 0) {
                VertexSet b(g.order());
                b.set(s);
                block_list.push_back(std::move(b));
            }
        }
    }
};

}  // namespace

std::vector<Edge> bridges(const Graph& g) {
    LowLink ll(g);
    ll.run();
    std::sort(ll.bridge_list.begin(), ll.bridge_list.end());
    return ll.bridge_list;
}

std::vector<VertexSet> blocks(const Graph& g) {
    LowLink ll(g);
    ll.run();
    return ll.block_list;
}

VertexSet simplicial_vertices(const Graph& g) {
    VertexSet out(g.order());
    for (int u = 0; u < g.order(); ++u) {
        bool ok = true;
        g.neighbors(u).for_each([&](int v) {
            if (!ok) return;
            VertexSet missing = g.neighbors(u) - g.neighbors(v);
            missing.reset(v);
            if (!missing.empty()) ok = false;
        });
        if (ok) out.set(u);
    }
    return out;
}

bool is_block_graph(const Graph& g) {
    for (const auto& b : blocks(g)) {
        auto vs = b.to_vector();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (!g.adjacent(vs[i], vs[j])) return false;
    }
    return true;
}

bool is_tree(const Graph& g) {
    return g.connected() && g.edge_count() == g.order() - 1;
}

bool is_complete(const Graph& g) {
    return g.edge_count() == g.order() * (g.order() - 1) / 2;
}

VertexSet leaves(const Graph& g) {
    VertexSet out(g.order());
    for (int u = 0; u < g.order(); ++u)
        if (g.degree(u) == 1) out.set(u);
    return out;
}

}  // namespace gpgraph
