#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <deque>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "gint/bounds.hpp"
#include "gint/cliques.hpp"
#include "gint/conflict_graph.hpp"
#include "gint/family.hpp"

namespace gint {

struct SolveStats {
    std::uint64_t nodes = 0;
    double wall_seconds = 0.0;
};

struct SolveResult {
    std::size_t value = 0;  // N(G,k); at most C(n,k), which is within the vertex budget
    Hypergraph witness;     // one maximum G-intersecting family
    SolveStats stats;
};

struct SolveOptions {
    int workers = 1;
    std::size_t vertex_budget = kDefaultVertexBudget;
};

namespace detail {

// Branch-and-bound maximum-independent-set search on the conflict graph.
// Branching vertex: maximum conflict degree within the remaining set,
// lowest index on ties; exclude branch first. Pruning: remaining count,
// then a greedy first-fit clique cover of the remaining subgraph (an
// independent set takes at most one vertex per clique).
class MisSearch {
public:
    MisSearch(const ConflictGraph& cg, std::atomic<std::size_t>& shared_best, std::mutex& mtx,
              std::vector<std::size_t>& best_set)
        : cg_(cg), shared_best_(shared_best), mtx_(mtx), best_set_(best_set) {}

    std::uint64_t nodes = 0;

    void run(DynamicBitset remaining, std::vector<std::size_t> chosen) {
        chosen_ = std::move(chosen);
        dfs(std::move(remaining));
    }

    std::size_t cover_bound(const DynamicBitset& rem) const {
        std::vector<DynamicBitset> cliques;
        for (std::size_t v = rem.find_first(); v != DynamicBitset::npos;
             v = rem.find_first(v + 1)) {
            bool placed = false;
            for (auto& c : cliques) {
                if (c.is_subset_of(cg_.conflict[v])) {
                    c.set(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                cliques.emplace_back(rem.size());
                cliques.back().set(v);
            }
        }
        return cliques.size();
    }

    // Maximum conflict degree within rem, lowest index on ties. Shared
    // with the root-splitting frontier.
    std::size_t pick_branch_vertex(const DynamicBitset& rem) const {
        std::size_t best_v = DynamicBitset::npos, best_deg = 0;
        for (std::size_t v = rem.find_first(); v != DynamicBitset::npos;
             v = rem.find_first(v + 1)) {
            std::size_t deg = cg_.conflict[v].count_and(rem);
            if (best_v == DynamicBitset::npos || deg > best_deg) {
                best_v = v;
                best_deg = deg;
            }
        }
        return best_v;
    }

private:
    void dfs(DynamicBitset rem) {
        ++nodes;
        std::size_t rem_count = rem.count();
        std::size_t best = shared_best_.load(std::memory_order_relaxed);
        if (chosen_.size() + rem_count <= best) return;
        if (rem_count == 0) {
            record(chosen_);
            return;
        }
        if (chosen_.size() + cover_bound(rem) <= best) return;

        std::size_t v = pick_branch_vertex(rem);
        rem.reset(v);

        // exclude v
        dfs(rem);

        // include v
        DynamicBitset rem_in = rem;
        rem_in.subtract(cg_.conflict[v]);
        chosen_.push_back(v);
        dfs(std::move(rem_in));
        chosen_.pop_back();
    }

    void record(const std::vector<std::size_t>& set) {
        std::lock_guard<std::mutex> lock(mtx_);
        if (set.size() > shared_best_.load(std::memory_order_relaxed)) {
            shared_best_.store(set.size(), std::memory_order_relaxed);
            best_set_ = set;
        }
    }

    const ConflictGraph& cg_;
    std::atomic<std::size_t>& shared_best_;
    std::mutex& mtx_;
    std::vector<std::size_t>& best_set_;
    std::vector<std::size_t> chosen_;
};

// Greedy seed in canonical index order; on star-shaped optima this often
// hits the maximum outright.
inline std::vector<std::size_t> greedy_seed(const ConflictGraph& cg) {
    const std::size_t m = cg.num_sets();
    std::vector<std::size_t> out;
    DynamicBitset blocked(m);
    for (std::size_t v = 0; v < m; ++v) {
        if (!blocked.test(v)) {
            out.push_back(v);
            blocked |= cg.conflict[v];
        }
    }
    return out;
}

inline Hypergraph witness_from_indices(const ConflictGraph& cg,
                                       const std::vector<std::size_t>& idx) {
    std::vector<VertexSet> edges;
    edges.reserve(idx.size());
    for (auto i : idx) edges.push_back(cg.subsets[i]);
    return Hypergraph(cg.n, std::move(edges), cg.k);
}

// Witness sanity: independent in the conflict graph, size = value, and
// maximal (no k-set outside can be added).
inline void assert_witness(const ConflictGraph& cg, const std::vector<std::size_t>& idx,
                           std::size_t value) {
    if (idx.size() != value) throw std::logic_error("solver: witness size != value");
    DynamicBitset in(cg.num_sets());
    for (auto i : idx) in.set(i);
    for (auto i : idx)
        if (cg.conflict[i].intersects(in))
            throw std::logic_error("solver: witness is not G-intersecting");
    for (std::size_t v = 0; v < cg.num_sets(); ++v)
        if (!in.test(v) && !cg.conflict[v].intersects(in))
            throw std::logic_error("solver: witness is not maximal");
}

struct Subproblem {
    DynamicBitset remaining;
    std::vector<std::size_t> chosen;
};

// Expand the top of the search tree breadth-first (same branching rule)
// into independent subproblems for the worker pool.
inline std::deque<Subproblem> split_root(const ConflictGraph& cg, std::atomic<std::size_t>& best,
                                         std::mutex& mtx, std::vector<std::size_t>& best_set,
                                         std::size_t want) {
    MisSearch probe(cg, best, mtx, best_set);
    std::deque<Subproblem> frontier;
    frontier.push_back({DynamicBitset(cg.num_sets(), true), {}});
    while (!frontier.empty() && frontier.size() < want) {
        Subproblem sub = std::move(frontier.front());
        frontier.pop_front();
        std::size_t rem_count = sub.remaining.count();
        std::size_t cur_best = best.load(std::memory_order_relaxed);
        if (sub.chosen.size() + rem_count <= cur_best) continue;
        if (rem_count == 0) {
            if (sub.chosen.size() > cur_best) {
                std::lock_guard<std::mutex> lock(mtx);
                if (sub.chosen.size() > best.load(std::memory_order_relaxed)) {
                    best.store(sub.chosen.size(), std::memory_order_relaxed);
                    best_set = sub.chosen;
                }
            }
            continue;
        }
        std::size_t v = probe.pick_branch_vertex(sub.remaining);
        Subproblem excl{sub.remaining, sub.chosen};
        excl.remaining.reset(v);
        Subproblem incl{excl.remaining, sub.chosen};
        incl.remaining.subtract(cg.conflict[v]);
        incl.chosen.push_back(v);
        frontier.push_back(std::move(excl));  // exclude first: matches the dfs order
        frontier.push_back(std::move(incl));
        if (frontier.size() >= cg.num_sets() * 2) break;  // give up splitting further
    }
    return frontier;
}

}  // namespace detail

/// Exact N(G,k) as a maximum independent set of the conflict graph. The
/// value is deterministic (it is the exact optimum); with workers > 1 the
/// witness may depend on the parallel schedule, with workers = 1 the whole
/// result is deterministic.
inline SolveResult solve_exact(const Graph& g, int k, const SolveOptions& opt = {}) {
    if (opt.workers < 1) throw std::invalid_argument("solve_exact: need workers >= 1");
    auto t0 = std::chrono::steady_clock::now();
    ConflictGraph cg = build_conflict_graph(g, k, opt.vertex_budget);
    const std::size_t m = cg.num_sets();

    std::atomic<std::size_t> best{0};
    std::mutex mtx;
    std::vector<std::size_t> best_set = detail::greedy_seed(cg);
    best.store(best_set.size());

    std::uint64_t nodes = 0;
    if (opt.workers == 1 || m < 64) {
        detail::MisSearch search(cg, best, mtx, best_set);
        search.run(DynamicBitset(m, true), {});
        nodes = search.nodes;
    } else {
        auto frontier = detail::split_root(cg, best, mtx, best_set,
                                           static_cast<std::size_t>(opt.workers) * 8);
        std::atomic<std::size_t> next{0};
        std::atomic<std::uint64_t> node_sum{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(opt.workers));
        for (int w = 0; w < opt.workers; ++w) {
            pool.emplace_back([&] {
                detail::MisSearch search(cg, best, mtx, best_set);
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= frontier.size()) break;
                    search.run(frontier[i].remaining, frontier[i].chosen);
                }
                node_sum.fetch_add(search.nodes);
            });
        }
        for (auto& t : pool) t.join();
        nodes = node_sum.load();
    }

    detail::assert_witness(cg, best_set, best.load());

    SolveResult res{best.load(), detail::witness_from_indices(cg, best_set), {}};
    res.stats.nodes = nodes;
    res.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

/// Independent oracle: plain include/exclude recursion over canonical
/// indices (lowest-index branching, include first) with only the trivial
/// remaining-count prune. Conflict adjacency is rebuilt here from the
/// direct definition of G-intersection, sharing nothing with solve_exact's
/// route. Guarded to C(n,k) <= 150.
inline SolveResult naive_solve(const Graph& g, int k) {
    int n = g.vertex_count();
    if (k < 1 || k > n) throw std::invalid_argument("naive_solve: need 1 <= k <= n");
    BigInt total = binomial(n, k);
    if (total > 150)
        throw std::invalid_argument("naive_solve: C(n,k)=" + total.str() +
                                    " exceeds the oracle guard of 150");
    auto t0 = std::chrono::steady_clock::now();
    std::vector<VertexSet> sets = enumerate_ksubsets(n, k);
    const std::size_t m = sets.size();

    // direct definition: x and y G-intersect iff they share a vertex or
    // some vertex of x is adjacent to some vertex of y
    auto direct = [&](const VertexSet& x, const VertexSet& y) {
        for (int v = x.first(); v >= 0; v = x.next(v)) {
            if (y.contains(v)) return true;
            if (g.neighbors(v).intersects(y)) return true;
        }
        return false;
    };
    std::vector<DynamicBitset> adj(m, DynamicBitset(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (!direct(sets[i], sets[j])) {
                adj[i].set(j);
                adj[j].set(i);
            }

    std::size_t best = 0;
    std::vector<std::size_t> best_set, chosen;
    std::uint64_t nodes = 0;
    auto rec = [&](auto&& self, DynamicBitset rem) -> void {
        ++nodes;
        if (chosen.size() > best) {
            best = chosen.size();
            best_set = chosen;
        }
        std::size_t v = rem.find_first();
        if (v == DynamicBitset::npos) return;
        if (chosen.size() + rem.count() <= best) return;
        rem.reset(v);
        // include first
        DynamicBitset rem_in = rem;
        rem_in.subtract(adj[v]);
        chosen.push_back(v);
        self(self, std::move(rem_in));
        chosen.pop_back();
        // exclude
        self(self, std::move(rem));
    };
    rec(rec, DynamicBitset(m, true));

    std::vector<VertexSet> edges;
    for (auto i : best_set) edges.push_back(sets[i]);
    SolveResult res{best, Hypergraph(n, std::move(edges), k), {}};
    res.stats.nodes = nodes;
    res.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

/// What the structure verifier reports for one solved instance.
struct StructureReport {
    int n = 0;
    int k = 0;
    int delta = 0;
    int omega = 0;
    BigInt value;
    BigInt theorem2;
    bool within_theorem2 = false;
    bool lemma1_ok = false;
    std::optional<bool> lemma2_ok;           // unset when delta = 0
    std::size_t maximum_clique_count = 0;
    std::vector<VertexSet> qualifying_cliques;  // max cliques K with H_K inside the witness
    bool any_clique_qualifies = false;
};

/// For each maximum clique K, tests whether every k-set meeting K belongs
/// to the witness; reports the qualifying cliques, the bound comparison,
/// and both lemma thresholds (the theorem's hypothesis regime). Reports,
/// never asserts: at desk scale the asymptotic regime may simply not apply.
inline StructureReport verify_extremal_structure(const Graph& g, int k, const SolveResult& result) {
    StructureReport rep;
    rep.n = g.vertex_count();
    rep.k = k;
    rep.delta = max_degree(g);
    CliqueResult cliques = clique_number(g);
    rep.omega = cliques.number;
    rep.maximum_clique_count = cliques.maximum_cliques.size();
    rep.value = result.value;
    rep.theorem2 = k >= 2 ? theorem2_bound(rep.n, k, rep.delta, rep.omega)
                          : binomial(rep.n, k) - binomial(rep.n - rep.omega, k);
    rep.within_theorem2 = rep.value <= rep.theorem2;
    rep.lemma1_ok = lemma1_threshold(rep.n, rep.delta, rep.omega, k);
    if (rep.delta >= 1) rep.lemma2_ok = lemma2_threshold(rep.n, rep.delta, k);

    std::unordered_set<VertexSet, VertexSetHash> members(result.witness.edges().begin(),
                                                         result.witness.edges().end());
    for (const auto& kq : cliques.maximum_cliques) {
        bool ok = true;
        for_each_ksubset(rep.n, k, [&](const VertexSet& x) {
            if (ok && x.intersects(kq) && !members.count(x)) ok = false;
        });
        if (ok) rep.qualifying_cliques.push_back(kq);
    }
    rep.any_clique_qualifies = !rep.qualifying_cliques.empty();
    return rep;
}

}  // namespace gint
