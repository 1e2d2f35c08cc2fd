#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace gint {

/// Heap-allocated bitset sized at runtime. Used where the universe is the
/// set of all k-subsets (conflict-graph adjacency, edge incidence columns),
/// which can be far larger than kMaxVertices.
class DynamicBitset {
public:
    DynamicBitset() = default;

    explicit DynamicBitset(std::size_t n, bool fill = false)
        : n_(n), w_((n + 63) / 64, fill ? ~std::uint64_t{0} : 0) {
        if (fill) mask_tail();
    }

    std::size_t size() const { return n_; }

    void set(std::size_t i) {
        assert(i < n_);
        w_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(std::size_t i) {
        assert(i < n_);
        w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    bool test(std::size_t i) const {
        assert(i < n_);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    bool all() const {
        if (n_ == 0) return true;
        for (std::size_t i = 0; i + 1 < w_.size(); ++i)
            if (w_[i] != ~std::uint64_t{0}) return false;
        std::uint64_t tail = (n_ % 64) ? ((~std::uint64_t{0}) >> (64 - n_ % 64)) : ~std::uint64_t{0};
        return w_.back() == tail;
    }

    DynamicBitset& operator|=(const DynamicBitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    DynamicBitset& operator&=(const DynamicBitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    /// this &= ~o
    DynamicBitset& subtract(const DynamicBitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    bool intersects(const DynamicBitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    std::size_t count_and(const DynamicBitset& o) const {
        assert(n_ == o.n_);
        std::size_t c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(w_[i] & o.w_[i]));
        return c;
    }

    bool is_subset_of(const DynamicBitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    /// Smallest set index >= from, or npos.
    static constexpr std::size_t npos = ~std::size_t{0};
    std::size_t find_first(std::size_t from = 0) const {
        if (from >= n_) return npos;
        std::size_t w = from >> 6;
        std::uint64_t cur = w_[w] >> (from & 63);
        if (cur) return from + static_cast<std::size_t>(std::countr_zero(cur));
        for (++w; w < w_.size(); ++w)
            if (w_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(w_[w]));
        return npos;
    }

    friend bool operator==(const DynamicBitset& a, const DynamicBitset& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

private:
    void mask_tail() {
        if (n_ % 64) w_.back() &= (~std::uint64_t{0}) >> (64 - n_ % 64);
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace gint
