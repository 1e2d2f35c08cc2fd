#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gint/binomial.hpp"
#include "gint/dynamic_bitset.hpp"
#include "gint/errors.hpp"
#include "gint/family.hpp"
#include "gint/graph.hpp"
#include "gint/subsets.hpp"

namespace gint {

inline constexpr std::size_t kDefaultVertexBudget = 100000;

/// Graph on the canonical indices of all k-subsets of {0..n-1}; i ~ j iff
/// the two k-sets are NOT G-intersecting. An independent set here is
/// exactly a G-intersecting family, and conversely.
struct ConflictGraph {
    int n = 0;
    int k = 0;
    std::vector<VertexSet> subsets;       // canonical lexicographic order
    std::vector<DynamicBitset> conflict;  // adjacency rows over subset indices

    std::size_t num_sets() const { return subsets.size(); }

    std::size_t conflict_edge_count() const {
        std::size_t twice = 0;
        for (const auto& row : conflict) twice += row.count();
        return twice / 2;
    }
};

inline ConflictGraph build_conflict_graph(const Graph& g, int k,
                                          std::size_t budget = kDefaultVertexBudget) {
    int n = g.vertex_count();
    if (k < 1 || k > n) throw std::invalid_argument("build_conflict_graph: need 1 <= k <= n");
    BigInt total = binomial(n, k);
    if (total > budget)
        throw CapacityError("C(" + std::to_string(n) + "," + std::to_string(k) + ")=" +
                            total.str() + " exceeds vertex budget " + std::to_string(budget));

    ConflictGraph cg;
    cg.n = n;
    cg.k = k;
    cg.subsets = enumerate_ksubsets(n, k);
    const std::size_t m = cg.subsets.size();

    std::vector<VertexSet> nbhd(m);
    for (std::size_t i = 0; i < m; ++i) nbhd[i] = closed_neighborhood(g, cg.subsets[i]);

    cg.conflict.assign(m, DynamicBitset(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            // conflict iff the j-th set misses N(set_i); the relation is
            // symmetric, so one direction suffices
            if (!cg.subsets[j].intersects(nbhd[i])) {
                cg.conflict[i].set(j);
                cg.conflict[j].set(i);
            }
        }
    }
    return cg;
}

}  // namespace gint
