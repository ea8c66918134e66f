#pragma once

#include <cstdint>

#include <json.hpp>

#include "gpgraph/graph.hpp"
#include "gpgraph/sierpinski.hpp"
#include "gpgraph/sierpinski_gp.hpp"
#include "gpgraph/solver.hpp"
#include "gpgraph/verify.hpp"
#include "gpgraph/vertex_set.hpp"

namespace gpgraph {

// ADL hooks so nlohmann::json(x) works for every result type the CLI emits.
void to_json(nlohmann::json& j, const VertexSet& s);
void to_json(nlohmann::json& j, const VertexMap& f);
void to_json(nlohmann::json& j, const Graph& g);
void to_json(nlohmann::json& j, const SolveResult& r);
void to_json(nlohmann::json& j, const VertexExtreme& r);
void to_json(nlohmann::json& j, const GpsResult& r);
void to_json(nlohmann::json& j, const Prediction& p);
void to_json(nlohmann::json& j, const ClaimResult& c);
void to_json(nlohmann::json& j, const VerifyReport& r);

// Enumeration listing with up to `limit` maps spelled out (all when < 0).
nlohmann::json maps_json(const MapEnumeration& maps, std::int64_t limit = -1);

}  // namespace gpgraph
