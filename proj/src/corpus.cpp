#include "gpgraph/corpus.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "gpgraph/generators.hpp"

namespace gpgraph {

namespace {

// Graphs on n <= 8 vertices as edge masks; pair (i,j), i<j, sits at bit
// j*(j-1)/2 + i.
using Mask = std::uint32_t;

int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

std::vector<std::vector<int>> permutations(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// bit_map[p][b] = image of pair-bit b under permutation p.
std::vector<std::vector<int>> pair_bit_maps(int n, const std::vector<std::vector<int>>& perms) {
    const int bits = n * (n - 1) / 2;
    std::vector<std::vector<int>> maps(perms.size(), std::vector<int>(static_cast<std::size_t>(bits)));
    for (std::size_t pi = 0; pi < perms.size(); ++pi) {
        const auto& p = perms[pi];
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                int a = p[static_cast<std::size_t>(i)], b = p[static_cast<std::size_t>(j)];
                if (a > b) std::swap(a, b);
                maps[pi][static_cast<std::size_t>(pair_bit(i, j))] = pair_bit(a, b);
            }
    }
    return maps;
}

Mask apply(const std::vector<int>& bit_map, Mask m) {
    Mask out = 0;
    while (m) {
        int b = std::countr_zero(m);
        m &= m - 1;
        out |= Mask{1} << bit_map[static_cast<std::size_t>(b)];
    }
    return out;
}

Mask canonical(const std::vector<std::vector<int>>& maps, Mask m) {
    Mask best = ~Mask{0};
    for (const auto& bm : maps) best = std::min(best, apply(bm, m));
    return best;
}

// Classes on exactly n vertices, grown by vertex augmentation from the
// classes on n-1 vertices.
std::vector<Mask> class_masks(int n) {
    std::vector<Mask> cur{0};  // single vertex, no edges
    for (int k = 2; k <= n; ++k) {
        auto maps = pair_bit_maps(k, permutations(k));
        std::unordered_set<Mask> seen;
        for (Mask base : cur) {
            for (Mask nb = 0; nb < (Mask{1} << (k - 1)); ++nb) {
                Mask m = base;
                for (int i = 0; i < k - 1; ++i)
                    if ((nb >> i) & 1) m |= Mask{1} << pair_bit(i, k - 1);
                seen.insert(canonical(maps, m));
            }
        }
        cur.assign(seen.begin(), seen.end());
        std::sort(cur.begin(), cur.end());
    }
    return cur;
}

Graph mask_to_graph(int n, Mask m) {
    std::vector<Edge> e;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((m >> pair_bit(i, j)) & 1) e.emplace_back(i, j);
    return build_graph(n, e, BuildMode::relaxed);
}

int rand_below(std::mt19937_64& rng, int n) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

Graph random_tree_rng(int n, std::mt19937_64& rng) {
    return random_tree(n, rng());
}

}  // namespace

std::vector<Graph> all_graphs_upto_iso(int n) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("all_graphs_upto_iso: supported for 1 <= n <= 7");
    std::vector<Graph> out;
    for (Mask m : class_masks(n)) out.push_back(mask_to_graph(n, m));
    return out;
}

std::vector<Graph> connected_graphs_upto_iso(int n) {
    std::vector<Graph> out;
    for (auto& g : all_graphs_upto_iso(n))
        if (g.connected()) out.push_back(std::move(g));
    return out;
}

Graph random_connected_graph(int n, double edge_prob, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("random_connected_graph: n >= 1 required");
    Graph tree = random_tree_rng(n, rng);
    std::vector<Edge> e = tree.edges();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (tree.adjacent(i, j)) continue;
            double roll = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (roll < edge_prob) e.emplace_back(i, j);
        }
    return build_graph(n, e);
}

Graph random_block_graph(int n_target, std::mt19937_64& rng) {
    if (n_target < 1) throw std::invalid_argument("random_block_graph: n_target >= 1 required");
    int n = std::min(n_target, 1 + rand_below(rng, 3));
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    while (n < n_target) {
        int at = rand_below(rng, n);
        int grow = 1 + rand_below(rng, 3);  // clique K_{grow+1} glued at `at`
        for (int i = 0; i < grow; ++i) {
            e.emplace_back(at, n + i);
            for (int j = 0; j < i; ++j) e.emplace_back(n + j, n + i);
        }
        n += grow;
    }
    return build_graph(n, e);
}

std::vector<Graph> random_corpus(int count, int max_n, std::uint64_t seed) {
    if (max_n < 4) throw std::invalid_argument("random_corpus: max_n >= 4 required");
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    out.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(out.size()) < count) {
        int n = 4 + rand_below(rng, max_n - 3);
        switch (out.size() % 5) {
            case 0: out.push_back(random_tree_rng(n, rng)); break;
            case 1: out.push_back(random_connected_graph(n, 0.15, rng)); break;
            case 2: out.push_back(random_connected_graph(n, 0.4, rng)); break;
            case 3: out.push_back(cycle(std::max(3, n))); break;
            default:
                if (out.size() % 10 == 4 && n <= 9) out.push_back(complete(n));
                else out.push_back(random_connected_graph(n, 0.7, rng));
                break;
        }
    }
    return out;
}

}  // namespace gpgraph
