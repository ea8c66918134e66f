#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "gpgraph/collinearity.hpp"
#include "gpgraph/corpus.hpp"
#include "gpgraph/generators.hpp"
#include "gpgraph/sierpinski.hpp"
#include "gpgraph/solver.hpp"
#include "gpgraph/structure.hpp"
#include "oracles.hpp"

using namespace gpgraph;

namespace {
VertexSet make_set(int n, std::initializer_list<int> vs) {
    VertexSet s(n);
    for (int v : vs) s.set(v);
    return s;
}
}  // namespace

TEST_CASE("collinearity oracle matches the reference betweenness formula") {
    for (const auto& g : random_corpus(20, 10, 11)) {
        CollinearityOracle o(g);
        auto d = oracles::fw_distances(g);
        const int n = g.order();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    if (a == b || b == c || a == c) continue;
                    bool ref = (d[a][b] >= 0 && d[b][c] >= 0 && d[a][c] >= 0) &&
                               (d[a][b] + d[b][c] == d[a][c] || d[a][b] + d[a][c] == d[b][c] ||
                                d[a][c] + d[b][c] == d[a][b]);
                    CHECK(o.collinear(a, b, c) == ref);
                }
    }
}

TEST_CASE("pair rows agree with per-triple queries, cached and uncached") {
    Graph small = petersen();
    Graph large = path(130);  // above the cache threshold
    CHECK(CollinearityOracle(small).cached());
    CHECK(!CollinearityOracle(large).cached());

    for (const Graph* gp : {&small, &large}) {
        const Graph& g = *gp;
        CollinearityOracle o(g);
        const int n = g.order();
        for (int x = 0; x < std::min(n, 12); ++x)
            for (int y = 0; y < std::min(n, 12); ++y) {
                if (x == y) continue;
                VertexSet row = o.pair_row_set(x, y);
                for (int w = 0; w < n; ++w) {
                    bool expect = w != x && w != y && o.collinear(x, y, w);
                    CHECK(row.test(w) == expect);
                }
            }
    }
}

TEST_CASE("oracle is safe to share across threads") {
    Graph g = petersen();
    CollinearityOracle o(g);
    std::atomic<int> disagreements{0};
    auto probe = [&] {
        for (int a = 0; a < 10; ++a)
            for (int b = 0; b < 10; ++b)
                for (int c = 0; c < 10; ++c) {
                    if (a == b || b == c || a == c) continue;
                    bool v1 = o.collinear(a, b, c);
                    bool v2 = o.pair_row_set(a, b).test(c);
                    if (v1 != v2) disagreements.fetch_add(1);
                }
    };
    std::thread t1(probe), t2(probe), t3(probe);
    t1.join();
    t2.join();
    t3.join();
    CHECK(disagreements.load() == 0);
}

TEST_CASE("general position verifiers on hand cases") {
    Graph p4 = path(4);
    CHECK(!is_general_position(p4, make_set(4, {0, 1, 2})));
    CHECK(is_general_position(p4, make_set(4, {0, 3})));
    CHECK(is_general_position(p4, make_set(4, {})));
    CHECK(is_general_position(p4, make_set(4, {2})));

    Graph c4 = cycle(4);
    // any vertex of C4 lies between its two neighbors
    CHECK(!is_general_position(c4, make_set(4, {0, 1, 2})));
    CHECK(is_general_position(c4, make_set(4, {0, 1})));
    CHECK(is_general_position_characterized(c4, make_set(4, {0, 1, 2})) ==
          is_general_position(c4, make_set(4, {0, 1, 2})));
}

TEST_CASE("triple-test and characterization verifiers agree on every subset (n <= 5)") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& g : connected_graphs_upto_iso(n)) {
            CollinearityOracle o(g);
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                VertexSet s(n);
                for (int v = 0; v < n; ++v)
                    if ((mask >> v) & 1) s.set(v);
                CHECK(is_general_position(o, s) == is_general_position_characterized(g, s));
            }
        }
    }
}

TEST_CASE("anchored set verifier") {
    Graph s5 = star(5);
    // members must avoid shortest paths to the anchor
    CHECK(is_u_colinear_set(s5, 1, make_set(5, {2, 3, 4})));
    CHECK(!is_u_colinear_set(s5, 1, make_set(5, {0, 2})));  // center between 2 and anchor
    CHECK(!is_u_colinear_set(s5, 1, make_set(5, {1, 2})));  // anchor inside the set
    Graph p5 = path(5);
    CHECK(is_u_colinear_set(p5, 2, make_set(5, {1, 3})));
    CHECK(!is_u_colinear_set(p5, 4, make_set(5, {0, 2})));  // 2 between 0 and 4
}

TEST_CASE("solver agrees with brute force on gp and xi") {
    std::vector<Graph> corpus;
    for (int n = 1; n <= 6; ++n)
        for (auto& g : connected_graphs_upto_iso(n)) corpus.push_back(std::move(g));
    for (auto& g : random_corpus(15, 8, 17)) corpus.push_back(std::move(g));

    for (const auto& g : corpus) {
        auto brute = oracles::brute_gp(g);
        SolveResult r = max_gp(g);
        CHECK(r.value == brute.value);
        CHECK(r.optimal);
        CHECK(r.witness.count() == r.value);
        CHECK(is_general_position(g, r.witness));

        auto d = oracles::fw_distances(g);
        for (int u = 0; u < g.order(); ++u) {
            auto bx = oracles::brute_xi(g, u);
            SolveResult x = xi(g, u);
            CHECK(x.value == bx.value);
            CHECK(!x.witness.test(u));
            CHECK(oracles::is_colinear_set(d, u, x.witness.to_vector()));
        }
    }
}

TEST_CASE("known closed-form values") {
    CHECK(max_gp(petersen()).value == 6);
    CHECK(max_gp(complete(7)).value == 7);
    CHECK(max_gp(path(9)).value == 2);
    CHECK(max_gp(cycle(4)).value == 2);
    CHECK(max_gp(cycle(5)).value == 3);
    CHECK(max_gp(cycle(6)).value == 3);
    CHECK(max_gp(star(7)).value == 6);

    // trees: gp = #leaves, xi distinguishes leaf anchors
    Graph t = random_tree(14, 99);
    int l = leaves(t).count();
    CHECK(max_gp(t).value == l);
    for (int u = 0; u < t.order(); ++u)
        CHECK(xi(t, u).value == (t.degree(u) == 1 ? l - 1 : l));
}

TEST_CASE("xi extremes and tie-breaking") {
    Graph s = star(4);  // center 0, leaves 1..3
    VertexExtreme lo = xi_minus(s), hi = xi_max(s);
    CHECK(lo.value == 2);
    CHECK(lo.vertex == 1);  // smallest anchor attaining the minimum
    CHECK(hi.value == 3);
    CHECK(hi.vertex == 0);
    CHECK(lo.optimal);
    CHECK(hi.optimal);

    VertexExtreme plo = xi_minus(petersen()), phi = xi_max(petersen());
    CHECK(plo.value == 5);
    CHECK(phi.value == 5);
    CHECK(plo.vertex == 0);  // all anchors tie; smallest index wins
    CHECK(phi.vertex == 0);
}

TEST_CASE("solver determinism and config variants preserve the value") {
    Graph g = fixture_H();
    SolveResult a = max_gp(g), b = max_gp(g);
    CHECK(a.value == b.value);
    CHECK(a.nodes == b.nodes);
    CHECK(a.witness.to_vector() == b.witness.to_vector());

    SolverConfig no_seed;
    no_seed.seed_greedy = false;
    SolverConfig no_cover;
    no_cover.cover_bound = false;
    SolverConfig by_degree;
    by_degree.branch_order = BranchOrder::degree_descending;
    for (const auto& cfg : {no_seed, no_cover, by_degree}) {
        CHECK(max_gp(g, cfg).value == a.value);
        CHECK(max_gp(petersen(), cfg).value == 6);
    }
}

TEST_CASE("solver limits yield honest non-optimal results") {
    Graph g = petersen();
    SolverConfig tight;
    tight.node_limit = 1;
    SolveResult r = max_gp(g, tight);
    CHECK(!r.optimal);
    CHECK(r.value <= 6);
    CHECK(r.witness.count() == r.value);
    CHECK(is_general_position(g, r.witness));  // best-so-far is still a valid set
    CHECK(r.nodes <= 1);

    // a larger limit can only improve the incumbent
    SolverConfig looser;
    looser.node_limit = 50;
    SolveResult r2 = max_gp(g, looser);
    CHECK(r2.value >= r.value);

    SolverConfig timed;
    timed.time_limit_ms = 1;
    ProductGraph big = build_product(complete(6), complete(9), identity_map(6));
    SolveResult rt = max_gp(big.graph, timed);
    CHECK(rt.value <= 25);
    CHECK(rt.witness.count() == rt.value);
}

TEST_CASE("solver input validation") {
    CHECK_THROWS_AS(xi(path(4), 4), std::out_of_range);
    CHECK_THROWS_AS(xi(path(4), -1), std::out_of_range);
    Graph huge = path(513);
    CHECK_THROWS_AS(max_gp(huge), std::invalid_argument);
    // disconnected graphs are rejected: distances are not total
    Graph disc = build_graph(4, {{0, 1}, {2, 3}}, BuildMode::relaxed);
    CHECK_THROWS_AS(max_gp(disc), std::invalid_argument);
}

TEST_CASE("bridge lower bound") {
    // path: both sides are paths, xi at the cut vertex of each side is 1
    CHECK(bridge_lower_bound(path(4), {1, 2}) == 2);
    CHECK(max_gp(path(4)).value == 2);

    // fixture values
    CHECK(bridge_lower_bound(fixture_H(), {fixture_H_u1, fixture_H_u2}) == 5);
    CHECK(bridge_lower_bound(fixture_Hprime(), {fixture_Hprime_u1, fixture_Hprime_u2}) == 6);

    // the bound never exceeds gp on random bridged graphs
    for (const auto& g : random_corpus(30, 11, 23)) {
        int gp = -1;
        for (Edge e : bridges(g)) {
            if (g.degree(e.first) < 2 || g.degree(e.second) < 2) continue;
            if (gp < 0) gp = max_gp(g).value;
            CHECK(bridge_lower_bound(g, e) <= gp);
        }
    }

    CHECK_THROWS_AS(bridge_lower_bound(path(4), {0, 1}), std::invalid_argument);  // endpoint degree 1
    CHECK_THROWS_AS(bridge_lower_bound(cycle(5), {0, 1}), std::invalid_argument); // not a bridge
}

TEST_CASE("block graph gp equals simplicial count and brute force") {
    std::mt19937_64 rng(31);
    std::vector<Graph> graphs = {path(6), star(6), complete(5),
                                 build_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}})};
    for (int i = 0; i < 6; ++i) graphs.push_back(random_block_graph(7 + i, rng));
    for (int i = 0; i < 4; ++i) graphs.push_back(random_tree(9 + i, rng()));
    for (const auto& g : graphs) {
        REQUIRE(is_block_graph(g));
        CHECK(gp_block_graph(g) == simplicial_vertices(g).count());
        CHECK(gp_block_graph(g) == max_gp(g).value);
    }
    CHECK_THROWS_AS(gp_block_graph(cycle(4)), std::invalid_argument);
}
