#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpgraph/sierpinski.hpp"
#include "gpgraph/solver.hpp"

namespace gpgraph {

enum class GpsKind { max, lower };

// Requested enumeration mode; auto_pick resolves to symmetry for
// complete x complete factors, full when the map space has at most
// kFullLimit maps, and capped otherwise.
struct EnumSpec {
    enum class Kind { auto_pick, full, symmetry, capped };
    Kind kind = Kind::auto_pick;
    std::int64_t cap = 100000;

    static constexpr std::int64_t kFullLimit = 1000000;
};

MapEnumeration resolve_maps(const Graph& g, const Graph& h, const EnumSpec& spec);

struct GpsResult {
    GpsKind kind = GpsKind::max;
    int value = 0;
    VertexMap witness_map;
    VertexSet witness_set;
    std::int64_t maps_evaluated = 0;
    // True only when the mode covered all of H^G (directly or via orbits)
    // and every per-map solve closed within limits.
    bool exhaustive = false;
    double ms = 0.0;
};

// Extreme of gp(G x_f H) over the enumerated maps. Ties between maps with
// the same value resolve to the lexicographically smallest witness map,
// independent of worker scheduling.
GpsResult gps_max(const Graph& g, const Graph& h, const EnumSpec& spec = {},
                  const SolverConfig& cfg = {}, int jobs = 1);
GpsResult gps_lower(const Graph& g, const Graph& h, const EnumSpec& spec = {},
                    const SolverConfig& cfg = {}, int jobs = 1);

// Closed-form consequences applicable to the pair (G,H): exact values where
// a theorem pins the quantity, otherwise bound intervals.
struct Prediction {
    std::string name;
    std::string target;  // "max", "lower", or "both"
    bool applicable = false;
    std::optional<long long> exact;
    std::optional<long long> lower;
    std::optional<long long> upper;
    std::string guard;  // hypothesis evaluation, human-readable
};

std::vector<Prediction> predict(const Graph& g, const Graph& h, const SolverConfig& cfg = {});

// Product vertices incident to no connecting edge; for complete factors
// these are exactly the vertices of degree n(H)-1.
int count_degree_nminus1(const ProductGraph& p);

// Fixed 25-vertex general position set in K6 x K9 under the identity map,
// plus that map; regression anchor for the hardest lower-gps case.
VertexMap k6k9_identity_map();
VertexSet k6k9_lower_witness();

}  // namespace gpgraph
