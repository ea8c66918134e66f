#include "gpgraph/solver.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "gpgraph/structure.hpp"

namespace gpgraph {

namespace {

using u64 = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr int kMaxSolverOrder = 512;

int popc(const u64* a, std::size_t w) {
    int c = 0;
    for (std::size_t i = 0; i < w; ++i) c += std::popcount(a[i]);
    return c;
}

int popc_and(const u64* a, const u64* b, std::size_t w) {
    int c = 0;
    for (std::size_t i = 0; i < w; ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

bool test_bit(const u64* a, int v) {
    return (a[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1;
}

void clear_bit(u64* a, int v) {
    a[static_cast<std::size_t>(v) >> 6] &= ~(u64{1} << (v & 63));
}

// Branch and bound over collinearity constraints. One frame per depth:
// candidate set C plus per-candidate conflict rows. Row x at depth d holds
// every y that cannot join S alongside x given the members included so far
// (triples through a member, or anchor pairs in xi mode). Including v
// filters C through row v and extends each surviving row with the triple
// mask of (x,v), so every generated S is valid by construction.
struct Search {
    const CollinearityOracle& o;
    const Graph& g;
    const SolverConfig& cfg;
    int n;
    std::size_t w;

    std::vector<u64> c_buf;      // (n+1) rows of w words
    std::vector<u64> conf_buf;   // (n+1) frames of n rows
    std::vector<u64> row_scratch;
    std::vector<u64> cover_buf;  // clique-cover commons
    std::vector<std::pair<int, int>> order_buf;

    std::vector<int> s;
    std::vector<int> best_set;
    int best = 0;
    std::int64_t nodes = 0;
    bool aborted = false;
    Clock::time_point deadline;
    bool has_deadline = false;

    Search(const CollinearityOracle& oracle, const Graph& graph, const SolverConfig& config)
        : o(oracle), g(graph), cfg(config), n(oracle.order()), w(oracle.words_per_row()) {
        c_buf.assign(static_cast<std::size_t>(n + 1) * w, 0);
        conf_buf.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n) * w, 0);
        row_scratch.assign(w, 0);
        cover_buf.assign(static_cast<std::size_t>(n) * w, 0);
        if (cfg.time_limit_ms < std::numeric_limits<std::int64_t>::max()) {
            deadline = Clock::now() + std::chrono::milliseconds(cfg.time_limit_ms);
            has_deadline = true;
        }
    }

    u64* cand(int d) { return c_buf.data() + static_cast<std::size_t>(d) * w; }
    u64* conf(int d, int x) {
        return conf_buf.data() +
               (static_cast<std::size_t>(d) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(x)) * w;
    }

    const u64* pair_row(int x, int v) {
        if (o.cached()) return o.pair_row(x, v);
        o.pair_row_into(x, v, row_scratch.data());
        return row_scratch.data();
    }

    bool out_of_budget() {
        if (nodes >= cfg.node_limit) return true;
        if (has_deadline && (nodes & 255) == 0 && Clock::now() > deadline) return true;
        return false;
    }

    // Build frame d+1 from including v at depth d, then push v.
    void include(int d, int v) {
        u64* cd = cand(d);
        u64* cc = cand(d + 1);
        const u64* vrow = conf(d, v);
        for (std::size_t i = 0; i < w; ++i) cc[i] = cd[i] & ~vrow[i];
        clear_bit(cc, v);
        for (std::size_t i = 0; i < w; ++i) {
            u64 word = cc[i];
            while (word) {
                int x = static_cast<int>(i * 64 + std::countr_zero(word));
                word &= word - 1;
                const u64* mask = pair_row(x, v);
                u64* dst = conf(d + 1, x);
                const u64* src = conf(d, x);
                for (std::size_t j = 0; j < w; ++j) dst[j] = src[j] | mask[j];
            }
        }
        s.push_back(v);
        if (static_cast<int>(s.size()) > best) {
            best = static_cast<int>(s.size());
            best_set = s;
        }
    }

    int pick_branch_vertex(int d) {
        const u64* cd = cand(d);
        int best_v = -1, best_deg = -1;
        for (std::size_t i = 0; i < w; ++i) {
            u64 word = cd[i];
            while (word) {
                int x = static_cast<int>(i * 64 + std::countr_zero(word));
                word &= word - 1;
                int deg = popc_and(conf(d, x), cd, w);
                bool wins = deg > best_deg;
                if (deg == best_deg && cfg.branch_order == BranchOrder::degree_descending)
                    wins = g.degree(x) > g.degree(best_v);
                if (wins) {
                    best_v = x;
                    best_deg = deg;
                }
            }
        }
        return best_v;
    }

    // Size of a greedy clique cover of the conflict graph on the
    // candidates; caps how many of them any valid extension can take.
    int clique_cover_bound(int d) {
        const u64* cd = cand(d);
        order_buf.clear();
        for (std::size_t i = 0; i < w; ++i) {
            u64 word = cd[i];
            while (word) {
                int x = static_cast<int>(i * 64 + std::countr_zero(word));
                word &= word - 1;
                order_buf.emplace_back(-popc_and(conf(d, x), cd, w), x);
            }
        }
        std::sort(order_buf.begin(), order_buf.end());
        int cliques = 0;
        for (auto [neg_deg, x] : order_buf) {
            (void)neg_deg;
            int home = -1;
            for (int k = 0; k < cliques; ++k) {
                if (test_bit(cover_buf.data() + static_cast<std::size_t>(k) * w, x)) {
                    home = k;
                    break;
                }
            }
            u64* common = cover_buf.data() + static_cast<std::size_t>(home < 0 ? cliques : home) * w;
            const u64* xrow = conf(d, x);
            if (home < 0) {
                for (std::size_t j = 0; j < w; ++j) common[j] = xrow[j] & cd[j];
                ++cliques;
            } else {
                for (std::size_t j = 0; j < w; ++j) common[j] &= xrow[j];
            }
        }
        return cliques;
    }

    void greedy_seed() {
        int d = 0;
        while (true) {
            u64* cd = cand(d);
            int v = -1, v_deg = std::numeric_limits<int>::max();
            for (std::size_t i = 0; i < w; ++i) {
                u64 word = cd[i];
                while (word) {
                    int x = static_cast<int>(i * 64 + std::countr_zero(word));
                    word &= word - 1;
                    int deg = popc_and(conf(d, x), cd, w);
                    if (deg < v_deg) {
                        v = x;
                        v_deg = deg;
                    }
                }
            }
            if (v < 0) break;
            include(d, v);
            ++d;
        }
        s.clear();  // root frame is untouched by include()
    }

    void recurse(int d) {
        u64* cd = cand(d);
        while (true) {
            ++nodes;
            if (out_of_budget()) {
                aborted = true;
                return;
            }
            if (static_cast<int>(s.size()) + popc(cd, w) <= best) return;
            if (cfg.cover_bound &&
                static_cast<int>(s.size()) + clique_cover_bound(d) <= best)
                return;
            int v = pick_branch_vertex(d);
            include(d, v);
            recurse(d + 1);
            s.pop_back();
            if (aborted) return;
            clear_bit(cd, v);
        }
    }

    SolveResult run(const u64* root_candidates, const u64* root_conf_rows) {
        auto t0 = Clock::now();
        u64* c0 = cand(0);
        for (std::size_t i = 0; i < w; ++i) c0[i] = root_candidates[i];
        if (root_conf_rows) {
            std::copy(root_conf_rows, root_conf_rows + static_cast<std::size_t>(n) * w,
                      conf_buf.data());
        }
        if (cfg.seed_greedy) greedy_seed();
        recurse(0);

        SolveResult res;
        res.value = best;
        res.witness = VertexSet(n);
        for (int v : best_set) res.witness.set(v);
        res.optimal = !aborted;
        res.nodes = nodes;
        res.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        return res;
    }
};

void require_solvable(const Graph& g) {
    if (!g.connected()) throw std::invalid_argument("solver: graph must be connected");
    if (g.order() > kMaxSolverOrder)
        throw std::invalid_argument("solver: order exceeds search envelope (" +
                                    std::to_string(kMaxSolverOrder) + ")");
}

std::vector<u64> anchor_conflict_rows(const CollinearityOracle& o, int u) {
    const int n = o.order();
    const std::size_t w = o.words_per_row();
    const auto& d = o.distances();
    std::vector<u64> rows(static_cast<std::size_t>(n) * w, 0);
    for (int x = 0; x < n; ++x) {
        if (x == u) continue;
        u64* row = rows.data() + static_cast<std::size_t>(x) * w;
        for (int y = 0; y < n; ++y) {
            if (y == x || y == u) continue;
            if (in_interval(d, x, u, y) || in_interval(d, y, u, x))
                row[static_cast<std::size_t>(y) >> 6] |= u64{1} << (y & 63);
        }
    }
    return rows;
}

}  // namespace

bool is_general_position(const CollinearityOracle& o, const VertexSet& s) {
    auto m = s.to_vector();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            for (std::size_t k = j + 1; k < m.size(); ++k)
                if (o.collinear(m[i], m[j], m[k])) return false;
    return true;
}

bool is_general_position(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw std::invalid_argument("is_general_position: universe mismatch");
    return is_general_position(CollinearityOracle(g), s);
}

bool is_general_position_characterized(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw std::invalid_argument("is_general_position_characterized: universe mismatch");
    if (s.count() <= 1) return true;

    DistanceMatrix d = all_pairs_distances(g);

    // Components of the induced subgraph.
    std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
    std::vector<std::vector<int>> parts;
    s.for_each([&](int v) {
        if (comp[static_cast<std::size_t>(v)] >= 0) return;
        int id = static_cast<int>(parts.size());
        parts.emplace_back();
        std::vector<int> stack{v};
        comp[static_cast<std::size_t>(v)] = id;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            parts[static_cast<std::size_t>(id)].push_back(x);
            (g.neighbors(x) & s).for_each([&](int y) {
                if (comp[static_cast<std::size_t>(y)] < 0) {
                    comp[static_cast<std::size_t>(y)] = id;
                    stack.push_back(y);
                }
            });
        }
    });

    // (a) every part is a clique
    for (const auto& part : parts)
        for (std::size_t i = 0; i < part.size(); ++i)
            for (std::size_t j = i + 1; j < part.size(); ++j)
                if (!g.adjacent(part[i], part[j])) return false;

    // (b) distance-constant across parts
    const int t = static_cast<int>(parts.size());
    std::vector<int> dist(static_cast<std::size_t>(t) * static_cast<std::size_t>(t), 0);
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            int val = d.at(parts[static_cast<std::size_t>(i)][0], parts[static_cast<std::size_t>(j)][0]);
            for (int a : parts[static_cast<std::size_t>(i)])
                for (int b : parts[static_cast<std::size_t>(j)])
                    if (d.at(a, b) != val) return false;
            dist[static_cast<std::size_t>(i) * static_cast<std::size_t>(t) +
                 static_cast<std::size_t>(j)] = val;
            dist[static_cast<std::size_t>(j) * static_cast<std::size_t>(t) +
                 static_cast<std::size_t>(i)] = val;
        }

    // (c) in-transitive over pairwise-distinct part indices
    auto pd = [&](int i, int j) {
        return dist[static_cast<std::size_t>(i) * static_cast<std::size_t>(t) +
                    static_cast<std::size_t>(j)];
    };
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            for (int k = 0; k < t; ++k) {
                if (i == j || j == k || i == k) continue;
                if (pd(i, k) == pd(i, j) + pd(j, k)) return false;
            }
    return true;
}

bool is_u_colinear_set(const CollinearityOracle& o, int u, const VertexSet& s) {
    if (s.test(u)) return false;
    if (!is_general_position(o, s)) return false;
    auto m = s.to_vector();
    const auto& d = o.distances();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (in_interval(d, m[i], u, m[j]) || in_interval(d, m[j], u, m[i])) return false;
    return true;
}

bool is_u_colinear_set(const Graph& g, int u, const VertexSet& s) {
    if (u < 0 || u >= g.order()) throw std::out_of_range("is_u_colinear_set: anchor out of range");
    return is_u_colinear_set(CollinearityOracle(g), u, s);
}

SolveResult max_gp(const Graph& g, const CollinearityOracle& o, const SolverConfig& cfg) {
    require_solvable(g);
    Search search(o, g, cfg);
    VertexSet all = VertexSet::full(g.order());
    SolveResult res = search.run(all.words(), nullptr);
    if (!is_general_position(o, res.witness))
        throw std::logic_error("max_gp: witness failed verification");
    return res;
}

SolveResult max_gp(const Graph& g, const SolverConfig& cfg) {
    return max_gp(g, CollinearityOracle(g), cfg);
}

SolveResult xi(const Graph& g, const CollinearityOracle& o, int u, const SolverConfig& cfg) {
    require_solvable(g);
    if (u < 0 || u >= g.order()) throw std::out_of_range("xi: anchor out of range");
    Search search(o, g, cfg);
    VertexSet all = VertexSet::full(g.order());
    all.reset(u);
    auto rows = anchor_conflict_rows(o, u);
    SolveResult res = search.run(all.words(), rows.data());
    if (!is_u_colinear_set(o, u, res.witness))
        throw std::logic_error("xi: witness failed verification");
    return res;
}

SolveResult xi(const Graph& g, int u, const SolverConfig& cfg) {
    return xi(g, CollinearityOracle(g), u, cfg);
}

namespace {

VertexExtreme xi_extreme(const Graph& g, const SolverConfig& cfg, bool want_max) {
    require_solvable(g);
    CollinearityOracle o(g);
    VertexExtreme out;
    bool all_optimal = true;
    for (int u = 0; u < g.order(); ++u) {
        SolveResult r = xi(g, o, u, cfg);
        out.nodes += r.nodes;
        out.ms += r.ms;
        all_optimal = all_optimal && r.optimal;
        bool better = out.vertex < 0 || (want_max ? r.value > out.value : r.value < out.value);
        if (better) {
            out.value = r.value;
            out.vertex = u;
        }
    }
    out.optimal = all_optimal;
    return out;
}

}  // namespace

VertexExtreme xi_minus(const Graph& g, const SolverConfig& cfg) {
    return xi_extreme(g, cfg, false);
}

VertexExtreme xi_max(const Graph& g, const SolverConfig& cfg) {
    return xi_extreme(g, cfg, true);
}

int bridge_lower_bound(const Graph& g, Edge e, const SolverConfig& cfg) {
    int a = std::min(e.first, e.second), b = std::max(e.first, e.second);
    auto bl = bridges(g);
    if (!std::binary_search(bl.begin(), bl.end(), Edge{a, b}))
        throw std::invalid_argument("bridge_lower_bound: edge is not a bridge");
    if (g.degree(a) < 2 || g.degree(b) < 2)
        throw std::invalid_argument("bridge_lower_bound: bridge endpoint of degree 1");

    std::vector<Edge> rest;
    for (auto ed : g.edges())
        if (ed != Edge{a, b}) rest.push_back(ed);
    Graph cut = build_graph(g.order(), rest, BuildMode::relaxed);

    int total = 0;
    for (int anchor : {a, b}) {
        auto part = induced_subgraph(g, component_of(cut, anchor), BuildMode::strict);
        total += xi(part.graph, part.from_parent[static_cast<std::size_t>(anchor)], cfg).value;
    }
    return total;
}

int gp_block_graph(const Graph& g) {
    if (!is_block_graph(g)) throw std::invalid_argument("gp_block_graph: not a block graph");
    return simplicial_vertices(g).count();
}

}  // namespace gpgraph
