#pragma once

#include <cstdint>
#include <vector>

namespace cover {

// Dense undirected graph over 0..n-1 with bitset rows; the clique machinery
// lives on row-wise AND/popcount.
class BitGraph {
public:
    BitGraph() = default;
    explicit BitGraph(int n) : n_(n), words_((n + 63) / 64), bits_(std::size_t(n) * words_, 0) {}

    int size() const { return n_; }
    int words() const { return words_; }

    void add_edge(int a, int b) {
        if (a == b) return;
        bits_[std::size_t(a) * words_ + b / 64] |= std::uint64_t(1) << (b % 64);
        bits_[std::size_t(b) * words_ + a / 64] |= std::uint64_t(1) << (a % 64);
    }
    bool edge(int a, int b) const {
        return a != b && (bits_[std::size_t(a) * words_ + b / 64] >> (b % 64)) & 1;
    }
    const std::uint64_t* row(int a) const { return bits_.data() + std::size_t(a) * words_; }

    int degree(int a) const {
        int d = 0;
        const std::uint64_t* r = row(a);
        for (int w = 0; w < words_; ++w) d += __builtin_popcountll(r[w]);
        return d;
    }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Bitset over graph vertices, sized to match a BitGraph's rows.
struct VertexSet {
    std::vector<std::uint64_t> w;

    explicit VertexSet(int words = 0) : w(words, 0) {}
    static VertexSet all(int n) {
        VertexSet s((n + 63) / 64);
        for (int i = 0; i < n; ++i) s.insert(i);
        return s;
    }
    void insert(int i) { w[i / 64] |= std::uint64_t(1) << (i % 64); }
    void erase(int i) { w[i / 64] &= ~(std::uint64_t(1) << (i % 64)); }
    bool contains(int i) const { return (w[i / 64] >> (i % 64)) & 1; }
    bool empty() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }
    // |this ∩ row|
    int count_and(const std::uint64_t* row) const {
        int c = 0;
        for (std::size_t i = 0; i < w.size(); ++i) c += __builtin_popcountll(w[i] & row[i]);
        return c;
    }
    VertexSet intersect(const std::uint64_t* row) const {
        VertexSet s(static_cast<int>(w.size()));
        for (std::size_t i = 0; i < w.size(); ++i) s.w[i] = w[i] & row[i];
        return s;
    }
    int first() const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i]) return static_cast<int>(i * 64 + __builtin_ctzll(w[i]));
        return -1;
    }
    template <typename F>
    void for_each(F f) const {
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::uint64_t x = w[i];
            while (x) {
                f(static_cast<int>(i * 64 + __builtin_ctzll(x)));
                x &= x - 1;
            }
        }
    }
};

}  // namespace cover
