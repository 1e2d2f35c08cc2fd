#pragma once

#include <algorithm>
#include <vector>

#include "gint/graph.hpp"

namespace gint {

struct CliqueResult {
    int number = 0;                          // omega(G)
    std::vector<VertexSet> maximum_cliques;  // every clique of size omega, lex-sorted
};

namespace detail {

// Bron-Kerbosch with pivoting; keeps every maximal clique whose size ties
// the best seen. Pivoting only skips non-maximal branches, so all maximum
// cliques are still reported.
inline void bk_collect(const Graph& g, VertexSet& r, VertexSet p, VertexSet x, CliqueResult& out) {
    if (p.empty() && x.empty()) {
        int size = r.count();
        if (size > out.number) {
            out.number = size;
            out.maximum_cliques.clear();
        }
        if (size == out.number) out.maximum_cliques.push_back(r);
        return;
    }
    if (r.count() + p.count() < out.number) return;  // cannot reach a tie

    int pivot = -1, best_cover = -1;
    VertexSet pux = p | x;
    for (int u = pux.first(); u >= 0; u = pux.next(u)) {
        int cover = (p & g.neighbors(u)).count();
        if (cover > best_cover) {
            best_cover = cover;
            pivot = u;
        }
    }
    VertexSet ext = p - g.neighbors(pivot);
    for (int v = ext.first(); v >= 0; v = ext.next(v)) {
        r.add(v);
        bk_collect(g, r, p & g.neighbors(v), x & g.neighbors(v), out);
        r.remove(v);
        p.remove(v);
        x.add(v);
    }
}

}  // namespace detail

/// omega(G) and the complete list of maximum cliques, exact. Intended for
/// desk-scale graphs; dense inputs may be slow.
inline CliqueResult clique_number(const Graph& g) {
    CliqueResult out;
    VertexSet r;
    detail::bk_collect(g, r, VertexSet::full(g.vertex_count()), VertexSet{}, out);
    std::sort(out.maximum_cliques.begin(), out.maximum_cliques.end());
    return out;
}

/// True iff every two distinct vertices of k are adjacent in g.
inline bool is_clique(const Graph& g, const VertexSet& k) {
    for (int u = k.first(); u >= 0; u = k.next(u))
        for (int v = k.next(u); v >= 0; v = k.next(v))
            if (!g.has_edge(u, v)) return false;
    return true;
}

}  // namespace gint
