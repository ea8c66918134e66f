#include "oracles.hpp"

#include <stdexcept>

namespace oracles {

using gpgraph::Edge;
using gpgraph::Graph;

std::vector<std::vector<int>> fw_distances(const Graph& g) {
    const int n = g.order();
    const int inf = 1 << 29;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    for (Edge e : g.edges()) d[e.first][e.second] = d[e.second][e.first] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (d[i][j] >= inf) d[i][j] = -1;
    return d;
}

namespace {
bool between(const std::vector<std::vector<int>>& d, int a, int m, int b) {
    if (d[a][b] < 0 || d[a][m] < 0 || d[m][b] < 0) return false;
    return d[a][m] + d[m][b] == d[a][b];
}
}  // namespace

bool is_gp_set(const std::vector<std::vector<int>>& d, const std::vector<int>& s) {
    const std::size_t k = s.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t m = 0; m < k; ++m) {
                if (i == j || j == m || i == m) continue;
                if (between(d, s[i], s[m], s[j])) return false;
            }
    return true;
}

bool is_colinear_set(const std::vector<std::vector<int>>& d, int u, const std::vector<int>& s) {
    for (int v : s)
        if (v == u) return false;
    if (!is_gp_set(d, s)) return false;
    for (int x : s)
        for (int y : s) {
            if (x == y) continue;
            if (between(d, x, y, u)) return false;
        }
    return true;
}

namespace {
template <class Pred>
BruteResult brute_best(const Graph& g, Pred ok) {
    const int n = g.order();
    if (n > 24) throw std::invalid_argument("brute force capped at 24 vertices");
    BruteResult best;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) s.push_back(v);
        if (static_cast<int>(s.size()) <= best.value && mask != 0) continue;
        if (ok(s)) best = {static_cast<int>(s.size()), s};
    }
    return best;
}
}  // namespace

BruteResult brute_gp(const Graph& g) {
    auto d = fw_distances(g);
    return brute_best(g, [&](const std::vector<int>& s) { return is_gp_set(d, s); });
}

BruteResult brute_xi(const Graph& g, int u) {
    auto d = fw_distances(g);
    return brute_best(g, [&](const std::vector<int>& s) { return is_colinear_set(d, u, s); });
}

}  // namespace oracles
