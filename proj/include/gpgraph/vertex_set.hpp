#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpgraph {

// Subset of the vertex range [0, n), packed 64 bits per word.
// All binary operations require both operands to share the same universe size.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : n_(universe), words_(static_cast<std::size_t>((universe + 63) / 64), 0) {
        if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.set(v);
        return s;
    }

    static VertexSet of(int universe, const std::vector<int>& vs) {
        VertexSet s(universe);
        for (int v : vs) s.set(v);
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const {
        check(v);
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void set(int v) {
        check(v);
        words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void reset(int v) {
        check(v);
        words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    bool is_superset_of(const VertexSet& other) const {
        match(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (other.words_[i] & ~words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& other) const {
        match(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    VertexSet& operator&=(const VertexSet& o) {
        match(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator|=(const VertexSet& o) {
        match(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator-=(const VertexSet& o) {
        match(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet s(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
        s.trim();
        return s;
    }

    // First member, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    // Smallest member strictly greater than v, or -1.
    int next(int v) const {
        if (v + 1 >= n_) return -1;
        std::size_t i = static_cast<std::size_t>(v + 1) >> 6;
        std::uint64_t w = words_[i] & (~std::uint64_t{0} << ((v + 1) & 63));
        while (true) {
            if (w) return static_cast<int>(i * 64 + std::countr_zero(w));
            if (++i >= words_.size()) return -1;
            w = words_[i];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(static_cast<int>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for_each([&](int v) {
            if (sep) s += ',';
            s += std::to_string(v);
            sep = true;
        });
        s += '}';
        return s;
    }

    const std::uint64_t* words() const { return words_.data(); }
    std::size_t word_count() const { return words_.size(); }

    bool operator==(const VertexSet&) const = default;

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex " + std::to_string(v));
    }
    void match(const VertexSet& o) const {
        if (n_ != o.n_) throw std::invalid_argument("VertexSet: universe mismatch");
    }
    void trim() {
        if (n_ & 63) words_.back() &= (~std::uint64_t{0}) >> (64 - (n_ & 63));
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace gpgraph
