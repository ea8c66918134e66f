#include "gpgraph/io_json.hpp"

namespace gpgraph {

using nlohmann::json;

void to_json(json& j, const VertexSet& s) { j = s.to_vector(); }

void to_json(json& j, const VertexMap& f) { j = f.values; }

void to_json(json& j, const Graph& g) {
    json edges = json::array();
    for (Edge e : g.edges()) edges.push_back({e.first, e.second});
    j = {{"n", g.order()}, {"edges", std::move(edges)}};
    if (!g.labels().empty()) j["labels"] = g.labels();
}

void to_json(json& j, const SolveResult& r) {
    j = {{"value", r.value},
         {"witness", r.witness},
         {"optimal", r.optimal},
         {"nodes", r.nodes},
         {"ms", r.ms}};
}

void to_json(json& j, const VertexExtreme& r) {
    j = {{"value", r.value},
         {"vertex", r.vertex},
         {"optimal", r.optimal},
         {"nodes", r.nodes},
         {"ms", r.ms}};
}

void to_json(json& j, const GpsResult& r) {
    j = {{"kind", r.kind == GpsKind::max ? "max" : "lower"},
         {"value", r.value},
         {"witnessMap", r.witness_map},
         {"witnessSet", r.witness_set},
         {"mapsEvaluated", r.maps_evaluated},
         {"exhaustive", r.exhaustive},
         {"ms", r.ms}};
}

void to_json(json& j, const Prediction& p) {
    j = {{"name", p.name},
         {"target", p.target},
         {"applicable", p.applicable},
         {"guard", p.guard}};
    j["exact"] = p.exact ? json(*p.exact) : json(nullptr);
    j["lower"] = p.lower ? json(*p.lower) : json(nullptr);
    j["upper"] = p.upper ? json(*p.upper) : json(nullptr);
}

void to_json(json& j, const ClaimResult& c) {
    j = {{"name", c.name},
         {"detail", c.detail},
         {"instances", c.instances},
         {"failures", c.failures},
         {"failureCount", c.failure_count},
         {"skipped", c.skipped},
         {"note", c.note},
         {"ms", c.ms},
         {"passed", c.passed()}};
}

void to_json(json& j, const VerifyReport& r) {
    j = {{"suite", r.suite},
         {"budgetMs", r.budget_ms},
         {"ms", r.ms},
         {"ok", r.ok()},
         {"anySkipped", r.any_skipped()},
         {"claims", r.claims}};
}

json maps_json(const MapEnumeration& maps, std::int64_t limit) {
    const char* mode = maps.mode() == MapEnumeration::Mode::full        ? "full"
                       : maps.mode() == MapEnumeration::Mode::symmetry ? "symmetry"
                                                                       : "capped";
    std::int64_t shown = maps.count();
    if (limit >= 0 && limit < shown) shown = limit;
    json listed = json::array();
    for (std::int64_t i = 0; i < shown; ++i) listed.push_back(maps.at(i));
    return {{"mode", mode},
            {"count", maps.count()},
            {"exhaustive", maps.exhaustive()},
            {"maps", std::move(listed)}};
}

}  // namespace gpgraph
