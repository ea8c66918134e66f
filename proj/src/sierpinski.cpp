#include "gpgraph/sierpinski.hpp"

#include <algorithm>
#include <stdexcept>

#include "gpgraph/structure.hpp"

namespace gpgraph {

namespace {

// n(H)^n(G) when it fits in 62 bits.
std::int64_t checked_pow(int base, int exp) {
    constexpr std::int64_t kCap = std::int64_t{1} << 62;
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > kCap / base) return -1;
        r *= base;
    }
    return r;
}

// Lexicographic rank of f in full order, saturating at 2^62.
std::int64_t map_rank(const VertexMap& f, int h_order) {
    constexpr std::int64_t kCap = std::int64_t{1} << 62;
    std::int64_t r = 0;
    for (int v : f.values) {
        if (r > (kCap - v) / h_order) return kCap;
        r = r * h_order + v;
    }
    return r;
}

}  // namespace

VertexMap constant_map(int g_order, int target) {
    return {std::vector<int>(static_cast<std::size_t>(g_order), target)};
}

VertexMap identity_map(int g_order) {
    VertexMap f;
    f.values.resize(static_cast<std::size_t>(g_order));
    for (int i = 0; i < g_order; ++i) f.values[static_cast<std::size_t>(i)] = i;
    return f;
}

bool is_injective(const VertexMap& f) {
    auto v = f.values;
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

ProductGraph build_product(const Graph& g, const Graph& h, const VertexMap& f) {
    if (!g.connected() || !h.connected())
        throw std::invalid_argument("build_product: both factors must be connected");
    if (static_cast<int>(f.values.size()) != g.order())
        throw std::invalid_argument("build_product: map length != n(G)");
    for (int t : f.values)
        if (t < 0 || t >= h.order())
            throw std::invalid_argument("build_product: map target out of range");

    ProductGraph p;
    p.g_dim = g.order();
    p.h_dim = h.order();
    p.map = f;

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.order()) * h.edges().size() + g.edges().size());
    for (int gi = 0; gi < g.order(); ++gi)
        for (auto [a, b] : h.edges()) edges.emplace_back(p.flat(gi, a), p.flat(gi, b));
    for (auto [g1, g2] : g.edges()) {
        int a = p.flat(g1, f.values[static_cast<std::size_t>(g2)]);
        int b = p.flat(g2, f.values[static_cast<std::size_t>(g1)]);
        p.connecting.emplace_back(std::min(a, b), std::max(a, b));
        edges.push_back(p.connecting.back());
    }
    std::sort(p.connecting.begin(), p.connecting.end());
    p.graph = build_graph(g.order() * h.order(), edges, BuildMode::strict);
    return p;
}

VertexSet copy_vertices(const ProductGraph& p, int g) {
    if (g < 0 || g >= p.g_dim) throw std::out_of_range("copy_vertices: copy index out of range");
    VertexSet s(p.g_dim * p.h_dim);
    for (int h = 0; h < p.h_dim; ++h) s.set(p.flat(g, h));
    return s;
}

std::vector<std::vector<int>> integer_partitions(int m, int max_parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int max_part, int parts_left) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        if (parts_left == 0) return;
        for (int k = std::min(rest, max_part); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k, parts_left - 1);
            cur.pop_back();
        }
    };
    rec(rec, m, m, max_parts);
    return out;
}

MapEnumeration MapEnumeration::full(int g_order, int h_order) {
    if (g_order < 1 || h_order < 1)
        throw std::invalid_argument("MapEnumeration: factor orders must be >= 1");
    std::int64_t total = checked_pow(h_order, g_order);
    if (total < 0)
        throw std::invalid_argument(
            "MapEnumeration: map space too large for full enumeration; use a cap");
    MapEnumeration e;
    e.mode_ = Mode::full;
    e.g_order_ = g_order;
    e.h_order_ = h_order;
    e.count_ = total;
    e.exhaustive_ = true;
    return e;
}

MapEnumeration MapEnumeration::symmetry(const Graph& g, const Graph& h) {
    if (!is_complete(g) || !is_complete(h))
        throw std::invalid_argument(
            "MapEnumeration: symmetry mode requires both factors complete");
    MapEnumeration e;
    e.mode_ = Mode::symmetry;
    e.g_order_ = g.order();
    e.h_order_ = h.order();
    e.partitions_ = integer_partitions(g.order(), h.order());
    e.count_ = static_cast<std::int64_t>(e.partitions_.size());
    e.exhaustive_ = true;
    return e;
}

MapEnumeration MapEnumeration::capped(int g_order, int h_order, std::int64_t cap) {
    if (g_order < 1 || h_order < 1)
        throw std::invalid_argument("MapEnumeration: factor orders must be >= 1");
    if (cap < 1) throw std::invalid_argument("MapEnumeration: cap must be >= 1");
    std::int64_t total = checked_pow(h_order, g_order);

    MapEnumeration e;
    e.mode_ = Mode::capped;
    e.g_order_ = g_order;
    e.h_order_ = h_order;
    if (total >= 0 && cap >= total) {
        e.prefix_ = total;
        e.count_ = total;
        e.exhaustive_ = true;
        return e;
    }
    e.prefix_ = cap;
    e.exhaustive_ = false;

    std::vector<VertexMap> mandatory;
    for (int t = 0; t < h_order; ++t) mandatory.push_back(constant_map(g_order, t));
    if (h_order >= g_order) mandatory.push_back(identity_map(g_order));
    for (auto& f : mandatory) {
        if (map_rank(f, h_order) < cap) continue;
        if (std::find(e.extra_.begin(), e.extra_.end(), f) == e.extra_.end())
            e.extra_.push_back(std::move(f));
    }
    e.count_ = e.prefix_ + static_cast<std::int64_t>(e.extra_.size());
    return e;
}

VertexMap MapEnumeration::at(std::int64_t i) const {
    if (i < 0 || i >= count_) throw std::out_of_range("MapEnumeration: index out of range");
    switch (mode_) {
        case Mode::symmetry: {
            const auto& parts = partitions_[static_cast<std::size_t>(i)];
            VertexMap f;
            f.values.reserve(static_cast<std::size_t>(g_order_));
            int target = 0;
            for (int k : parts) {
                for (int j = 0; j < k; ++j) f.values.push_back(target);
                ++target;
            }
            return f;
        }
        case Mode::capped:
            if (i >= prefix_) return extra_[static_cast<std::size_t>(i - prefix_)];
            [[fallthrough]];
        case Mode::full: {
            VertexMap f;
            f.values.assign(static_cast<std::size_t>(g_order_), 0);
            std::int64_t rest = i;
            for (int pos = g_order_ - 1; pos >= 0; --pos) {
                f.values[static_cast<std::size_t>(pos)] = static_cast<int>(rest % h_order_);
                rest /= h_order_;
            }
            return f;
        }
    }
    throw std::logic_error("MapEnumeration: bad mode");
}

}  // namespace gpgraph
