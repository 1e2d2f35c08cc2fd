#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "gint/vertex_set.hpp"

namespace gint {

/// Finite list of distinct vertex sets over a ground set {0..ground_n-1},
/// optionally k-uniform. Immutable after construction.
class Hypergraph {
public:
    Hypergraph(int ground_n, std::vector<VertexSet> edges, std::optional<int> uniform_k = std::nullopt)
        : ground_n_(ground_n), uniform_k_(uniform_k), edges_(std::move(edges)) {
        if (ground_n < 1 || ground_n > kMaxVertices)
            throw std::invalid_argument("Hypergraph: ground set size out of range");
        if (uniform_k_ && *uniform_k_ < 1)
            throw std::invalid_argument("Hypergraph: uniform k must be >= 1");
        VertexSet range = VertexSet::full(ground_n);
        std::unordered_set<VertexSet, VertexSetHash> seen;
        seen.reserve(edges_.size() * 2);
        for (const auto& e : edges_) {
            if (!e.is_subset_of(range))
                throw std::invalid_argument("Hypergraph: edge " + e.to_string() + " out of range");
            if (uniform_k_ && e.count() != *uniform_k_)
                throw std::invalid_argument("Hypergraph: edge " + e.to_string() + " is not " +
                                            std::to_string(*uniform_k_) + "-uniform");
            if (!seen.insert(e).second)
                throw std::invalid_argument("Hypergraph: duplicate edge " + e.to_string());
        }
    }

    int ground_size() const { return ground_n_; }
    std::optional<int> uniform_k() const { return uniform_k_; }
    const std::vector<VertexSet>& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }

private:
    int ground_n_;
    std::optional<int> uniform_k_;
    std::vector<VertexSet> edges_;
};

/// H_v = { e in H : v in e }.
inline Hypergraph filter_by_vertex(const Hypergraph& h, int v) {
    if (v < 0 || v >= h.ground_size())
        throw std::invalid_argument("filter_by_vertex: vertex out of range");
    std::vector<VertexSet> out;
    for (const auto& e : h.edges())
        if (e.contains(v)) out.push_back(e);
    return Hypergraph(h.ground_size(), std::move(out), h.uniform_k());
}

/// H_Y = { e in H : Y subset of e }.
inline Hypergraph filter_by_superset(const Hypergraph& h, const VertexSet& y) {
    if (!y.is_subset_of(VertexSet::full(h.ground_size())))
        throw std::invalid_argument("filter_by_superset: set out of range");
    std::vector<VertexSet> out;
    for (const auto& e : h.edges())
        if (y.is_subset_of(e)) out.push_back(e);
    return Hypergraph(h.ground_size(), std::move(out), h.uniform_k());
}

}  // namespace gint
