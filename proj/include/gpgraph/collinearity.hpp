#pragma once

#include <cstdint>
#include <vector>

#include "gpgraph/distance.hpp"
#include "gpgraph/graph.hpp"

namespace gpgraph {

// Triple test over the distance matrix: {a,b,c} are collinear when one of
// them lies on a shortest path between the other two. Below
// kCacheThreshold vertices all pair rows are materialized as bitsets;
// above, rows are produced on demand into caller scratch. Immutable after
// construction, safe to share across threads.
class CollinearityOracle {
public:
    static constexpr int kCacheThreshold = 128;

    explicit CollinearityOracle(const Graph& g);

    int order() const { return n_; }
    const DistanceMatrix& distances() const { return d_; }
    std::size_t words_per_row() const { return w_; }
    bool cached() const { return !cache_.empty(); }

    // Distinct vertices required.
    bool collinear(int a, int b, int c) const {
        int ab = d_.at(a, b), bc = d_.at(b, c), ac = d_.at(a, c);
        return ab + bc == ac || ab + ac == bc || ac + bc == ab;
    }

    // Cached row for pair (x,y): bit w set iff w differs from x,y and
    // {x,y,w} is collinear. Only valid when cached().
    const std::uint64_t* pair_row(int x, int y) const {
        return cache_.data() +
               (static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) +
                static_cast<std::size_t>(y)) * w_;
    }

    // Writes the pair row into out (w_ words) regardless of cache state.
    void pair_row_into(int x, int y, std::uint64_t* out) const;

    VertexSet pair_row_set(int x, int y) const;

private:
    int n_ = 0;
    std::size_t w_ = 0;
    DistanceMatrix d_;
    std::vector<std::uint64_t> cache_;
};

}  // namespace gpgraph
