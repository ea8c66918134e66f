#include "gpgraph/collinearity.hpp"

namespace gpgraph {

CollinearityOracle::CollinearityOracle(const Graph& g)
    : n_(g.order()),
      w_(static_cast<std::size_t>((g.order() + 63) / 64)),
      d_(all_pairs_distances(g)) {
    if (n_ >= kCacheThreshold) return;
    cache_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_) * w_, 0);
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
            if (x == y) continue;
            pair_row_into(x, y, cache_.data() +
                                    (static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) +
                                     static_cast<std::size_t>(y)) * w_);
        }
}

void CollinearityOracle::pair_row_into(int x, int y, std::uint64_t* out) const {
    for (std::size_t i = 0; i < w_; ++i) out[i] = 0;
    for (int v = 0; v < n_; ++v) {
        if (v == x || v == y) continue;
        if (collinear(x, y, v))
            out[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }
}

VertexSet CollinearityOracle::pair_row_set(int x, int y) const {
    VertexSet s(n_);
    if (cached()) {
        const std::uint64_t* row = pair_row(x, y);
        for (int v = 0; v < n_; ++v)
            if ((row[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1) s.set(v);
    } else {
        for (int v = 0; v < n_; ++v) {
            if (v == x || v == y) continue;
            if (collinear(x, y, v)) s.set(v);
        }
    }
    return s;
}

}  // namespace gpgraph
