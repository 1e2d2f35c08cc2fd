#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gint/vertex_set.hpp"

namespace gint {

/// Simple undirected graph on {0..n-1}, adjacency as per-vertex bitsets.
/// Immutable after construction; all invariants (symmetry, no self-loops,
/// range) are enforced by the constructor.
class Graph {
public:
    explicit Graph(int n, std::span<const std::pair<int, int>> edge_list = {}) : n_(n) {
        if (n < 1) throw std::invalid_argument("Graph: vertex count must be positive");
        if (n > kMaxVertices)
            throw std::invalid_argument("Graph: vertex count " + std::to_string(n) +
                                        " exceeds compiled capacity " + std::to_string(kMaxVertices));
        adj_.resize(static_cast<std::size_t>(n));
        for (auto [u, v] : edge_list) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("Graph: edge (" + std::to_string(u) + "," +
                                            std::to_string(v) + ") out of range");
            if (u == v)
                throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
            adj_[static_cast<std::size_t>(u)].add(v);  // duplicates are idempotent
            adj_[static_cast<std::size_t>(v)].add(u);
        }
    }

    int vertex_count() const { return n_; }

    const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    bool has_edge(int u, int v) const {
        return u != v && adj_[static_cast<std::size_t>(u)].contains(v);
    }

    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }

    /// All edges as (u,v) pairs with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[static_cast<std::size_t>(u)].next(u); v >= 0;
                 v = adj_[static_cast<std::size_t>(u)].next(v))
                out.emplace_back(u, v);
        return out;
    }

    std::size_t edge_count() const {
        std::size_t m = 0;
        for (int u = 0; u < n_; ++u) m += static_cast<std::size_t>(degree(u));
        return m / 2;
    }

private:
    int n_;
    std::vector<VertexSet> adj_;
};

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    return Graph(n, e);
}

/// Cycle on {0..n-1}: u ~ v iff u-v = +-1 mod n. Requires n >= 3.
inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    e.emplace_back(0, n - 1);
    return Graph(n, e);
}

inline Graph from_edge_list(int n, std::span<const std::pair<int, int>> edge_list) {
    return Graph(n, edge_list);
}

inline int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

/// N(x) = x together with every vertex adjacent to x. N(empty) = empty,
/// and |N(x)| <= (max_degree+1) * |x|.
inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) {
    VertexSet out = x;
    for (int v = x.first(); v >= 0; v = x.next(v)) out |= g.neighbors(v);
    return out;
}

/// True iff g is a cycle: connected and 2-regular.
inline bool is_cycle_graph(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    VertexSet seen{0};
    int prev = -1, cur = 0;
    for (int step = 0; step < n - 1; ++step) {
        int nxt = -1;
        for (int w = g.neighbors(cur).first(); w >= 0; w = g.neighbors(cur).next(w))
            if (w != prev) {
                nxt = w;
                break;
            }
        if (nxt < 0 || seen.contains(nxt)) return false;
        seen.add(nxt);
        prev = cur;
        cur = nxt;
    }
    return seen.count() == n;
}

}  // namespace gint
