#include <doctest.h>

#include <stdexcept>

#include "gpgraph/generators.hpp"
#include "gpgraph/sierpinski_gp.hpp"
#include "gpgraph/solver.hpp"
#include "gpgraph/structure.hpp"

using namespace gpgraph;

namespace {
const Prediction* find_pred(const std::vector<Prediction>& ps, const std::string& name) {
    for (const auto& p : ps)
        if (p.name == name) return &p;
    return nullptr;
}
}  // namespace

TEST_CASE("mode resolution") {
    // complete factors resolve to orbit representatives
    MapEnumeration m1 = resolve_maps(complete(3), complete(5), {});
    CHECK(m1.mode() == MapEnumeration::Mode::symmetry);
    CHECK(m1.count() == 3);

    // small non-complete spaces resolve to full
    MapEnumeration m2 = resolve_maps(path(3), cycle(4), {});
    CHECK(m2.mode() == MapEnumeration::Mode::full);
    CHECK(m2.count() == 64);

    // huge spaces fall back to the cap
    EnumSpec capped_spec;
    capped_spec.cap = 10;
    MapEnumeration m3 = resolve_maps(path(30), path(3), capped_spec);
    CHECK(m3.mode() == MapEnumeration::Mode::capped);
    CHECK(!m3.exhaustive());
    CHECK(m3.count() >= 10);

    // explicit requests are honored
    EnumSpec full_spec{EnumSpec::Kind::full, 0};
    CHECK(resolve_maps(complete(2), complete(3), full_spec).mode() ==
          MapEnumeration::Mode::full);
}

TEST_CASE("gps on K2 products matches the doubled anchored invariants") {
    for (const Graph& h : {petersen(), cycle(6), fixture_H(), star(5)}) {
        GpsResult mx = gps_max(complete(2), h, {EnumSpec::Kind::full, 0});
        GpsResult lo = gps_lower(complete(2), h, {EnumSpec::Kind::full, 0});
        CHECK(mx.value == 2 * xi_max(h).value);
        CHECK(lo.value == 2 * xi_minus(h).value);
        CHECK(mx.exhaustive);
        CHECK(lo.exhaustive);
        CHECK(lo.value <= mx.value);
        CHECK(mx.kind == GpsKind::max);
        CHECK(lo.kind == GpsKind::lower);
        CHECK(mx.maps_evaluated == h.order() * h.order());
    }
}

TEST_CASE("gps witnesses reproduce their value") {
    for (auto kind : {GpsKind::max, GpsKind::lower}) {
        GpsResult r = kind == GpsKind::max ? gps_max(path(3), cycle(5), {EnumSpec::Kind::full, 0})
                                           : gps_lower(path(3), cycle(5), {EnumSpec::Kind::full, 0});
        ProductGraph p = build_product(path(3), cycle(5), r.witness_map);
        CHECK(max_gp(p.graph).value == r.value);
        CHECK(static_cast<int>(r.witness_set.count()) == r.value);
        CHECK(is_general_position(p.graph, r.witness_set));
    }
}

TEST_CASE("gps is deterministic for any worker count") {
    GpsResult base = gps_max(complete(3), cycle(5), {EnumSpec::Kind::full, 0}, {}, 1);
    for (int jobs : {2, 4, 8}) {
        GpsResult r = gps_max(complete(3), cycle(5), {EnumSpec::Kind::full, 0}, {}, jobs);
        CHECK(r.value == base.value);
        CHECK(r.witness_map == base.witness_map);
        CHECK(r.witness_set.to_vector() == base.witness_set.to_vector());
        CHECK(r.maps_evaluated == base.maps_evaluated);
    }
    GpsResult lo_base = gps_lower(complete(3), cycle(5), {EnumSpec::Kind::full, 0}, {}, 1);
    GpsResult lo_par = gps_lower(complete(3), cycle(5), {EnumSpec::Kind::full, 0}, {}, 5);
    CHECK(lo_par.value == lo_base.value);
    CHECK(lo_par.witness_map == lo_base.witness_map);
}

TEST_CASE("gps ties resolve to the lexicographically smallest map") {
    // on K2 x K2 every map attains the same value, so the witness must be
    // the all-zero map
    GpsResult r = gps_max(complete(2), complete(2), {EnumSpec::Kind::full, 0}, {}, 4);
    CHECK(r.witness_map.values == std::vector<int>{0, 0});
    GpsResult lo = gps_lower(complete(2), complete(2), {EnumSpec::Kind::full, 0}, {}, 4);
    CHECK(lo.witness_map.values == std::vector<int>{0, 0});
}

TEST_CASE("non-exhaustive modes are flagged, never silently trusted") {
    EnumSpec spec;
    spec.kind = EnumSpec::Kind::capped;
    spec.cap = 3;
    GpsResult r = gps_max(path(3), cycle(5), spec);
    CHECK(!r.exhaustive);
    CHECK(r.maps_evaluated < 125);

    // per-solve limits also break exhaustiveness
    SolverConfig tight;
    tight.node_limit = 1;
    GpsResult rt = gps_max(complete(2), petersen(), {EnumSpec::Kind::full, 0}, tight, 4);
    CHECK(!rt.exhaustive);
}

TEST_CASE("complete-factor formulas at small scale") {
    for (int m = 2; m <= 4; ++m)
        for (int n = 2; n <= 4; ++n) {
            GpsResult mx = gps_max(complete(m), complete(n));
            CHECK(mx.value == m * (n - 1));
            CHECK(mx.exhaustive);
        }
    CHECK(gps_lower(complete(2), complete(3)).value == 2 * (3 - 2 + 1));
    CHECK(gps_lower(complete(3), complete(4)).value == 3 * (4 - 3 + 1));
}

TEST_CASE("tree-factor closed form") {
    GpsResult r = gps_max(complete(3), star(4), {EnumSpec::Kind::full, 0});
    CHECK(r.value == 3 * 3);
    GpsResult p = gps_max(path(3), path(4), {EnumSpec::Kind::full, 0});
    CHECK(p.value == 3 * 2);
}

TEST_CASE("predictions: K2 factor") {
    auto ps = predict(complete(2), petersen());
    const Prediction* mx = find_pred(ps, "k2-max");
    REQUIRE(mx);
    CHECK(mx->applicable);
    CHECK(mx->target == "max");
    REQUIRE(mx->exact.has_value());
    CHECK(*mx->exact == 10);
    const Prediction* lo = find_pred(ps, "k2-lower");
    REQUIRE(lo);
    REQUIRE(lo->exact.has_value());
    CHECK(*lo->exact == 10);
}

TEST_CASE("predictions: sandwich and equality criterion") {
    auto ps = predict(path(3), cycle(5));
    const Prediction* sw = find_pred(ps, "sandwich");
    REQUIRE(sw);
    CHECK(sw->applicable);
    REQUIRE(sw->lower.has_value());
    REQUIRE(sw->upper.has_value());
    CHECK(*sw->lower == 3);       // gp(C5)
    CHECK(*sw->upper == 3 * 3);   // n(G) gp(C5)

    // gp(H) = xi(H) forces the max to attain the roof
    Graph h = path(4);  // gp = xi = 2
    auto ps2 = predict(cycle(4), h);
    const Prediction* eq = find_pred(ps2, "max-equality");
    REQUIRE(eq);
    CHECK(eq->applicable);
    REQUIRE(eq->exact.has_value());
    CHECK(*eq->exact == 4 * 2);
    CHECK(gps_max(cycle(4), h, {EnumSpec::Kind::full, 0}).value == 8);
}

TEST_CASE("predictions: trees and complete factors") {
    auto ps = predict(complete(3), star(5));
    const Prediction* tr = find_pred(ps, "tree-max");
    REQUIRE(tr);
    CHECK(tr->applicable);
    CHECK(*tr->exact == 3 * 4);

    auto pk = predict(complete(3), complete(4));
    const Prediction* cm = find_pred(pk, "complete-max");
    REQUIRE(cm);
    CHECK(*cm->exact == 3 * 3);
    const Prediction* cl = find_pred(pk, "complete-lower");
    REQUIRE(cl);
    CHECK(cl->applicable);  // 4 >= 2*3-2
    CHECK(*cl->exact == 3 * 2);

    // guard violation: K6 x K9 has 9 < 2*6-2
    auto pg = predict(complete(6), complete(9));
    const Prediction* gl = find_pred(pg, "complete-lower");
    REQUIRE(gl);
    CHECK(!gl->applicable);
    CHECK(!gl->exact.has_value());
    const Prediction* fl = find_pred(pg, "complete-floor");
    REQUIRE(fl);
    CHECK(fl->applicable);
    REQUIRE(fl->lower.has_value());
    CHECK(*fl->lower == 24);  // (9-6+1)*6
    const Prediction* gm = find_pred(pg, "complete-max");
    REQUIRE(gm);
    CHECK(*gm->exact == 6 * 8);

    // trees on fewer than 3 vertices are excluded from the tree formula
    auto pt = predict(complete(3), complete(2));
    const Prediction* t2 = find_pred(pt, "tree-max");
    if (t2) CHECK(!t2->applicable);
}

TEST_CASE("the hard pair: transcribed witness and the exceptional value") {
    ProductGraph p = build_product(complete(6), complete(9), k6k9_identity_map());
    VertexSet w = k6k9_lower_witness();
    CHECK(w.count() == 25);
    CHECK(is_general_position(p.graph, w));
    CHECK(is_general_position_characterized(p.graph, w));
    CHECK(max_gp(p.graph).value == 25);
}
