#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace isolation {

/// Largest supported graph order. Rows are fixed-width so that set algebra
/// never allocates.
inline constexpr int kMaxVertices = 1024;

/**
 * Dense bit-vector over vertex indices [0, kMaxVertices).
 *
 * The width is fixed; the owning graph's order is not stored, so callers are
 * responsible for keeping every set bit below n.
 */
class VertexSet {
public:
    static constexpr int kWords = kMaxVertices / 64;

    VertexSet() = default;
    VertexSet(std::initializer_list<int> vertices) {
        for (int v : vertices) insert(v);
    }

    static VertexSet from_vector(const std::vector<int>& vertices) {
        VertexSet s;
        for (int v : vertices) s.insert(v);
        return s;
    }

    /// {0, 1, ..., n-1}
    static VertexSet prefix(int n) {
        VertexSet s;
        int full = n / 64;
        for (int w = 0; w < full; ++w) s.words_[w] = ~uint64_t{0};
        if (n % 64) s.words_[full] = (uint64_t{1} << (n % 64)) - 1;
        return s;
    }

    bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void insert(int v) { words_[v >> 6] |= uint64_t{1} << (v & 63); }
    void erase(int v) { words_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// Least member, or -1 when empty.
    int first() const {
        for (int w = 0; w < kWords; ++w)
            if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
        return -1;
    }

    /// Least member greater than v, or -1.
    int next(int v) const {
        ++v;
        if (v >= kMaxVertices) return -1;
        int w = v >> 6;
        uint64_t word = words_[w] & (~uint64_t{0} << (v & 63));
        while (true) {
            if (word) return w * 64 + std::countr_zero(word);
            if (++w == kWords) return -1;
            word = words_[w];
        }
    }

    /// Greatest member, or -1.
    int last() const {
        for (int w = kWords - 1; w >= 0; --w)
            if (words_[w]) return w * 64 + 63 - std::countl_zero(words_[w]);
        return -1;
    }

    bool intersects(const VertexSet& o) const {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }

    int intersection_count(const VertexSet& o) const {
        int c = 0;
        for (int w = 0; w < kWords; ++w) c += std::popcount(words_[w] & o.words_[w]);
        return c;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
        return a.words_ <=> b.words_;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    const std::array<uint64_t, kWords>& words() const { return words_; }

    template <typename F>
    void for_each(F&& f) const {
        for (int w = 0; w < kWords; ++w) {
            uint64_t word = words_[w];
            while (word) {
                int b = std::countr_zero(word);
                f(w * 64 + b);
                word &= word - 1;
            }
        }
    }

private:
    std::array<uint64_t, kWords> words_{};
};

struct VertexSetHash {
    size_t operator()(const VertexSet& s) const noexcept {
        uint64_t h = 0xcbf29ce484222325ull;
        for (auto w : s.words()) {
            h ^= w;
            h *= 0x100000001b3ull;
            h ^= h >> 29;
        }
        return static_cast<size_t>(h);
    }
};

}  // namespace isolation
