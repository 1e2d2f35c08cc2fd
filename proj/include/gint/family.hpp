#pragma once

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gint/binomial.hpp"
#include "gint/cliques.hpp"
#include "gint/dynamic_bitset.hpp"
#include "gint/graph.hpp"
#include "gint/hypergraph.hpp"
#include "gint/subsets.hpp"

namespace gint {

/// True iff x and y intersect or some edge of g joins them; equivalently
/// x meets the closed neighborhood of y. Symmetric. Undefined (rejected)
/// for empty sets.
inline bool g_intersects(const Graph& g, const VertexSet& x, const VertexSet& y) {
    if (x.empty() || y.empty())
        throw std::invalid_argument("g_intersects: edges must be nonempty");
    VertexSet range = VertexSet::full(g.vertex_count());
    if (!x.is_subset_of(range) || !y.is_subset_of(range))
        throw std::invalid_argument("g_intersects: sets exceed the graph's vertex range");
    if (x.intersects(y)) return true;
    for (int v = y.first(); v >= 0; v = y.next(v))
        if (x.intersects(g.neighbors(v))) return true;
    return false;
}

namespace detail {

// Family-level operations presume H and G share one vertex set.
inline void require_same_ground(const Graph& g, const Hypergraph& h, const char* op) {
    if (h.ground_size() != g.vertex_count())
        throw std::invalid_argument(std::string(op) +
                                    ": hypergraph ground set does not match the graph");
}

// Incidence columns: column v = bitmask over edge indices of the edges
// containing v.
inline std::vector<DynamicBitset> incidence_columns(int n, const std::vector<VertexSet>& edges) {
    std::vector<DynamicBitset> cols(static_cast<std::size_t>(n), DynamicBitset(edges.size()));
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (int v = edges[i].first(); v >= 0; v = edges[i].next(v))
            cols[static_cast<std::size_t>(v)].set(i);
    return cols;
}

// Edges of h hitting the vertex set s, as an OR of incidence columns.
inline DynamicBitset edges_hitting(const std::vector<DynamicBitset>& cols, std::size_t m,
                                   const VertexSet& s) {
    DynamicBitset acc(m);
    for (int v = s.first(); v >= 0; v = s.next(v)) acc |= cols[static_cast<std::size_t>(v)];
    return acc;
}

}  // namespace detail

/// Pairwise G-intersection over the whole family (vacuously true when the
/// family has at most one edge). A pair conflicts exactly when one edge
/// misses the closed neighborhood of the other, so it suffices to check,
/// for each edge h, that every edge hits N(h).
inline bool is_g_intersecting(const Graph& g, const Hypergraph& h) {
    detail::require_same_ground(g, h, "is_g_intersecting");
    const auto& edges = h.edges();
    if (edges.size() <= 1) return true;
    for (const auto& e : edges)
        if (e.empty()) throw std::invalid_argument("is_g_intersecting: edges must be nonempty");
    auto cols = detail::incidence_columns(g.vertex_count(), edges);
    for (const auto& e : edges) {
        DynamicBitset hit = detail::edges_hitting(cols, edges.size(), closed_neighborhood(g, e));
        if (!hit.all()) return false;
    }
    return true;
}

/// F = { N(h) : h in H }, duplicates removed (first occurrence kept).
/// Generally non-uniform.
inline Hypergraph neighborhood_hypergraph(const Graph& g, const Hypergraph& h) {
    detail::require_same_ground(g, h, "neighborhood_hypergraph");
    if (h.size() == 0)
        throw std::invalid_argument("neighborhood_hypergraph: family must be nonempty");
    std::vector<VertexSet> out;
    std::unordered_set<VertexSet, VertexSetHash> seen;
    for (const auto& e : h.edges()) {
        VertexSet nb = closed_neighborhood(g, e);
        if (seen.insert(nb).second) out.push_back(nb);
    }
    return Hypergraph(h.ground_size(), std::move(out));
}

struct CoverResult {
    int tau = 0;
    VertexSet cover;
};

/// Minimum vertex set meeting every edge, plus one witness. Exact
/// branch-and-bound: branch on the vertices of a smallest uncovered edge.
/// Rejects hypergraphs containing an empty edge (no cover exists).
inline CoverResult cover_number(const Hypergraph& h) {
    const auto& edges = h.edges();
    for (const auto& e : edges)
        if (e.empty())
            throw std::invalid_argument("cover_number: hypergraph contains an empty edge");
    if (edges.empty()) return {0, VertexSet{}};

    auto cols = detail::incidence_columns(h.ground_size(), edges);
    const std::size_t m = edges.size();

    // greedy initial cover: repeatedly take the vertex hitting the most
    // uncovered edges (lowest index on ties)
    VertexSet best_cover;
    {
        DynamicBitset covered(m);
        while (!covered.all()) {
            int pick = -1;
            std::size_t gain = 0;
            for (int v = 0; v < h.ground_size(); ++v) {
                std::size_t hits = 0;
                for (std::size_t i = 0; i < m; ++i)
                    if (!covered.test(i) && cols[static_cast<std::size_t>(v)].test(i)) ++hits;
                if (hits > gain) {
                    gain = hits;
                    pick = v;
                }
            }
            best_cover.add(pick);
            covered |= cols[static_cast<std::size_t>(pick)];
        }
    }
    int best = best_cover.count();

    VertexSet current;
    auto rec = [&](auto&& self, const DynamicBitset& covered, int size) -> void {
        if (covered.all()) {
            if (size < best) {
                best = size;
                best_cover = current;
            }
            return;
        }
        if (size + 1 >= best) return;  // at least one more vertex is needed
        // smallest uncovered edge, lowest index on ties
        std::size_t pick = DynamicBitset::npos;
        int pick_size = kMaxVertices + 1;
        for (std::size_t i = 0; i < m; ++i) {
            if (covered.test(i)) continue;
            int sz = edges[i].count();
            if (sz < pick_size) {
                pick_size = sz;
                pick = i;
            }
        }
        for (int v = edges[pick].first(); v >= 0; v = edges[pick].next(v)) {
            DynamicBitset next = covered;
            next |= cols[static_cast<std::size_t>(v)];
            current.add(v);
            self(self, next, size + 1);
            current.remove(v);
        }
    };
    rec(rec, DynamicBitset(m), 0);
    return {best, best_cover};
}

/// The derived cross condition: every h in H meets every f in
/// F = neighborhood_hypergraph(g, H). Holds whenever H is G-intersecting.
inline bool check_cross_condition(const Graph& g, const Hypergraph& h) {
    detail::require_same_ground(g, h, "check_cross_condition");
    if (h.size() == 0) return true;
    const auto& edges = h.edges();
    auto cols = detail::incidence_columns(g.vertex_count(), edges);
    Hypergraph f = neighborhood_hypergraph(g, h);
    for (const auto& fe : f.edges()) {
        DynamicBitset hit = detail::edges_hitting(cols, edges.size(), fe);
        if (!hit.all()) return false;
    }
    return true;
}

/// H_K: every k-set meeting the clique K. |H_K| = C(n,k) - C(n-|K|,k).
inline Hypergraph build_clique_family(const Graph& g, const VertexSet& clique, int k) {
    int n = g.vertex_count();
    if (clique.empty() || !clique.is_subset_of(VertexSet::full(n)))
        throw std::invalid_argument("build_clique_family: clique out of range or empty");
    if (!is_clique(g, clique))
        throw std::invalid_argument("build_clique_family: input set is not a clique");
    if (k < 1 || k > n) throw std::invalid_argument("build_clique_family: need 1 <= k <= n");
    std::vector<VertexSet> out;
    for_each_ksubset(n, k, [&](const VertexSet& x) {
        if (x.intersects(clique)) out.push_back(x);
    });
    return Hypergraph(n, std::move(out), k);
}

/// The cycle-extremal family on cycle_graph(n): all k-sets meeting the
/// clique {1,2} plus all k-sets containing {0,3}. Size
/// C(n,k) - C(n-2,k) + C(n-4,k-2).
inline Hypergraph build_cycle_extremal(int n, int k) {
    if (n < 6) throw std::invalid_argument("build_cycle_extremal: need n >= 6");
    if (n > kMaxVertices)
        throw std::invalid_argument("build_cycle_extremal: n exceeds compiled vertex capacity");
    if (k < 2 || k > n) throw std::invalid_argument("build_cycle_extremal: need 2 <= k <= n");
    VertexSet clique{1, 2};
    VertexSet chord{0, 3};
    std::vector<VertexSet> out;
    for_each_ksubset(n, k, [&](const VertexSet& x) {
        if (x.intersects(clique) || chord.is_subset_of(x)) out.push_back(x);
    });
    return Hypergraph(n, std::move(out), k);
}

/// Greedy exploratory construction: start from H_K, then for each pair
/// {u,v} in N(K)\K whose joint neighborhood covers K (lexicographic pair
/// order), tentatively add all k-sets containing {u,v} and disjoint from
/// K, keeping the batch only if the family stays G-intersecting. The
/// result is a certified lower-bound witness, not claimed optimal.
inline Hypergraph augment_clique_family(const Graph& g, const VertexSet& clique, int k) {
    if (k < 2) throw std::invalid_argument("augment_clique_family: need k >= 2");
    int n = g.vertex_count();
    Hypergraph base = build_clique_family(g, clique, k);
    std::vector<VertexSet> edges = base.edges();

    VertexSet ring = closed_neighborhood(g, clique) - clique;
    std::vector<std::pair<int, int>> pairs;
    for (int u = ring.first(); u >= 0; u = ring.next(u))
        for (int v = ring.next(u); v >= 0; v = ring.next(v))
            if (clique.is_subset_of(closed_neighborhood(g, VertexSet{u, v})))
                pairs.emplace_back(u, v);

    std::unordered_set<VertexSet, VertexSetHash> present(edges.begin(), edges.end());
    for (auto [u, v] : pairs) {
        std::vector<VertexSet> additions;
        VertexSet uv{u, v};
        // k-sets containing {u,v}, disjoint from K: choose k-2 more
        // vertices outside K and {u,v}
        std::vector<int> pool;
        for (int w = 0; w < n; ++w)
            if (!clique.contains(w) && w != u && w != v) pool.push_back(w);
        int psize = static_cast<int>(pool.size());
        if (k - 2 <= psize) {
            for_each_ksubset(psize, k - 2, [&](const VertexSet& idx) {
                VertexSet x = uv;
                for (int i = idx.first(); i >= 0; i = idx.next(i))
                    x.add(pool[static_cast<std::size_t>(i)]);
                if (!present.count(x)) additions.push_back(x);
            });
        }
        if (additions.empty()) continue;
        std::vector<VertexSet> tentative = edges;
        tentative.insert(tentative.end(), additions.begin(), additions.end());
        if (is_g_intersecting(g, Hypergraph(n, tentative, k))) {
            edges = std::move(tentative);
            present.insert(additions.begin(), additions.end());
        }
    }
    return Hypergraph(n, std::move(edges), k);
}

}  // namespace gint
