#include "gpgraph/generators.hpp"

#include <functional>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>

namespace gpgraph {

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: n >= 1 required");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return build_graph(n, e);
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: n >= 1 required");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_graph(n, e);
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n >= 3 required");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return build_graph(n, e);
}

Graph star(int n) {
    if (n < 2) throw std::invalid_argument("star: n >= 2 required");
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return build_graph(n, e);
}

Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);        // outer cycle
        e.emplace_back(i, i + 5);              // spoke
        e.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return build_graph(10, e);
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_tree: n >= 1 required");
    if (n <= 2) return path(n);

    // Prufer decode; rng() % n keeps the result platform-independent
    // (std::uniform_int_distribution is not portable across libraries).
    std::mt19937_64 rng(seed);
    std::vector<int> prufer(static_cast<std::size_t>(n - 2));
    for (auto& p : prufer) p = static_cast<int>(rng() % static_cast<std::uint64_t>(n));

    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int p : prufer) ++deg[static_cast<std::size_t>(p)];

    std::priority_queue<int, std::vector<int>, std::greater<>> leaf_heap;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1) leaf_heap.push(v);

    std::vector<Edge> e;
    e.reserve(static_cast<std::size_t>(n - 1));
    for (int p : prufer) {
        int leaf = leaf_heap.top();
        leaf_heap.pop();
        e.emplace_back(leaf, p);
        if (--deg[static_cast<std::size_t>(p)] == 1) leaf_heap.push(p);
    }
    int a = leaf_heap.top();
    leaf_heap.pop();
    e.emplace_back(a, leaf_heap.top());
    return build_graph(n, e);
}

Graph cycle_chain(int k, int l) {
    if (k < 2 || l < 2) throw std::invalid_argument("cycle_chain: k >= 2 and l >= 2 required");
    const int stride = 2 * k - 1;
    const int n = stride * l + 1;
    std::vector<Edge> e;
    for (int i = 0; i < l; ++i) {
        const int left = stride * i;
        const int right = stride * (i + 1);
        int prev = left;
        for (int t = 1; t <= k - 1; ++t) {  // top path
            e.emplace_back(prev, left + t);
            prev = left + t;
        }
        e.emplace_back(prev, right);
        prev = left;
        for (int t = k; t <= 2 * k - 2; ++t) {  // bottom path
            e.emplace_back(prev, left + t);
            prev = left + t;
        }
        e.emplace_back(prev, right);
    }
    return build_graph(n, e);
}

int cycle_chain_u(int k, int l) {
    if (k < 2 || l < 2) throw std::invalid_argument("cycle_chain_u: parameters out of range");
    return 0;
}

int cycle_chain_v(int k, int l) {
    if (k < 2 || l < 2) throw std::invalid_argument("cycle_chain_v: parameters out of range");
    return 2 * k - 1;
}

namespace {

std::vector<std::string> numbered_labels(const char* prefix, int n, int base) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + base));
    return out;
}

}  // namespace

Graph fixture_H() {
    std::vector<Edge> e = {
        {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},      // spine
        {5, 7}, {7, 6}, {6, 12}, {12, 5},            // 4-cycle on the last spine vertex
        {0, 9}, {9, 2}, {2, 10}, {10, 0},            // 4-cycle across spine vertices 0,2
        {2, 8}, {8, 4}, {4, 11}, {11, 2},            // 4-cycle across spine vertices 2,4
    };
    return with_labels(build_graph(13, e), numbered_labels("x", 13, 1));
}

Graph fixture_Hprime() {
    std::vector<Edge> e;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) e.emplace_back(i, j);  // K6
    e.insert(e.end(), {{2, 6}, {3, 6}, {4, 6}});               // apex
    e.emplace_back(6, 7);                                      // bridge
    for (int i = 7; i < 11; ++i)
        for (int j = i + 1; j < 11; ++j) e.emplace_back(i, j);  // K4
    return with_labels(build_graph(11, e), numbered_labels("x", 11, 1));
}

Graph sierpinski_demo_K4() {
    // Four K4 copies on {4g,...,4g+3}; copy g keeps its own index g as the
    // attachment target, and copies g,g' are joined by (4g+g', 4g'+g).
    std::vector<Edge> e;
    for (int g = 0; g < 4; ++g)
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) e.emplace_back(4 * g + a, 4 * g + b);
    for (int g = 0; g < 4; ++g)
        for (int h = g + 1; h < 4; ++h) e.emplace_back(4 * g + h, 4 * h + g);
    return build_graph(16, e);
}

}  // namespace gpgraph
