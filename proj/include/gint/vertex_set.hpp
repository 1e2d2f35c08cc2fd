#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

// Maximum ground-set size, configurable at build time (must be a multiple
// of 64). Everything in this toolkit works on vertex sets over {0..n-1}
// with n <= GINT_MAX_VERTICES.
#ifndef GINT_MAX_VERTICES
#define GINT_MAX_VERTICES 256
#endif

namespace gint {

inline constexpr int kMaxVertices = GINT_MAX_VERTICES;
static_assert(kMaxVertices >= 64, "vertex capacity must be at least 64");
static_assert(kMaxVertices % 64 == 0, "vertex capacity must be a multiple of 64");

/// Fixed-capacity bitset over {0..kMaxVertices-1}. Value type, cheap to
/// copy; represents k-sets, neighborhoods and covers.
class VertexSet {
public:
    static constexpr int kWords = kMaxVertices / 64;

    constexpr VertexSet() = default;

    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) add(v);
    }

    /// The full set {0..n-1}.
    static VertexSet full(int n) {
        assert(n >= 0 && n <= kMaxVertices);
        VertexSet s;
        for (int w = 0; w < kWords; ++w) {
            int lo = w * 64;
            if (n >= lo + 64) {
                s.w_[w] = ~std::uint64_t{0};
            } else if (n > lo) {
                s.w_[w] = (~std::uint64_t{0}) >> (64 - (n - lo));
            }
        }
        return s;
    }

    void add(int v) {
        assert(v >= 0 && v < kMaxVertices);
        w_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void remove(int v) {
        assert(v >= 0 && v < kMaxVertices);
        w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    bool contains(int v) const {
        assert(v >= 0 && v < kMaxVertices);
        return (w_[v >> 6] >> (v & 63)) & 1;
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.w_ == b.w_; }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return a.w_ != b.w_; }

    /// Smallest element, or -1 if empty.
    int first() const { return next(-1); }

    /// Smallest element greater than `after`, or -1 if none.
    int next(int after) const {
        int start = after + 1;
        if (start >= kMaxVertices) return -1;
        int w = start >> 6;
        std::uint64_t cur = w_[w] >> (start & 63);
        if (cur) return start + std::countr_zero(cur);
        for (++w; w < kWords; ++w)
            if (w_[w]) return w * 64 + std::countr_zero(w_[w]);
        return -1;
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    /// Order by the sorted element sequence (lexicographic): the set whose
    /// smallest differing element is present comes first.
    bool lex_less(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i) {
            std::uint64_t d = w_[i] ^ o.w_[i];
            if (d) {
                std::uint64_t low = d & ~(d - 1);
                return (w_[i] & low) != 0;
            }
        }
        return false;
    }
    friend bool operator<(const VertexSet& a, const VertexSet& b) { return a.lex_less(b); }

    std::size_t hash() const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto w : w_) {
            h ^= static_cast<std::size_t>(w);
            h *= 0x100000001b3ull;
        }
        return h;
    }

    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for (int v = first(); v >= 0; v = next(v)) {
            if (sep) s += ',';
            s += std::to_string(v);
            sep = true;
        }
        s += '}';
        return s;
    }

private:
    std::array<std::uint64_t, kWords> w_{};
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace gint
