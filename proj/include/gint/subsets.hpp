#pragma once

#include <stdexcept>
#include <vector>

#include "gint/binomial.hpp"
#include "gint/vertex_set.hpp"

namespace gint {

/// Visits every k-subset of {0..n-1} exactly once, in lexicographic order
/// of the sorted element lists. The visiting index is the subset's
/// canonical id throughout the toolkit.
template <typename Fn>
void for_each_ksubset(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) throw std::invalid_argument("for_each_ksubset: need 0 <= k <= n");
    if (n > kMaxVertices)
        throw std::invalid_argument("for_each_ksubset: n exceeds compiled vertex capacity");
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
    while (true) {
        VertexSet s;
        for (int v : c) s.add(v);
        fn(s);
        // advance to the lexicographic successor
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
}

/// All C(n,k) k-subsets in canonical (lexicographic) order.
inline std::vector<VertexSet> enumerate_ksubsets(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("enumerate_ksubsets: need 0 <= k <= n");
    std::vector<VertexSet> out;
    BigInt total = binomial(n, k);
    if (total <= (BigInt(1) << 26)) out.reserve(static_cast<std::size_t>(total));
    for_each_ksubset(n, k, [&](const VertexSet& s) { out.push_back(s); });
    return out;
}

}  // namespace gint
