#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gint/binomial.hpp"
#include "gint/cliques.hpp"
#include "gint/graph.hpp"

namespace gint {

/// Classical intersecting-family bound C(n-1, k-1).
inline BigInt ekr_bound(int n, int k) {
    if (k < 1) throw std::invalid_argument("ekr_bound: need k >= 1");
    return binomial(n - 1, k - 1);
}

/// C(n,k) - C(n-omega,k) + C(omega*(delta-omega+1), 2) * C(n-omega-2, k-2).
inline BigInt theorem2_bound(int n, int k, int delta, int omega) {
    if (omega < 1 || n < omega)
        throw std::invalid_argument("theorem2_bound: need n >= omega >= 1");
    if (delta < omega - 1)
        throw std::invalid_argument("theorem2_bound: need delta >= omega - 1");
    if (k < 2) throw std::invalid_argument("theorem2_bound: need k >= 2");
    BigInt middle = binomial(static_cast<long long>(omega) * (delta - omega + 1), 2) *
                    binomial(n - omega - 2, k - 2);
    return binomial(n, k) - binomial(n - omega, k) + middle;
}

/// C(n,k) - C(n-2,k) + C(n-4,k-2): the size of the cycle-extremal family.
inline BigInt cycle_formula(int n, int k) {
    if (n < 6) throw std::invalid_argument("cycle_formula: need n >= 6");
    if (k < 2) throw std::invalid_argument("cycle_formula: need k >= 2");
    return binomial(n, k) - binomial(n - 2, k) + binomial(n - 4, k - 2);
}

/// k < sqrt(omega*n / (2*(delta+1)^2)), cleared of the square root:
/// 2*(delta+1)^2*k^2 < omega*n, exact integer arithmetic.
inline bool lemma1_threshold(int n, int delta, int omega, int k) {
    BigInt d1 = delta + 1;
    return 2 * d1 * d1 * k * k < BigInt(omega) * n;
}

/// k <= sqrt(n / (delta*(delta+1))), cleared: delta*(delta+1)*k^2 <= n.
/// delta = 0 is rejected (the edgeless case is classical EKR).
inline bool lemma2_threshold(int n, int delta, int k) {
    if (delta < 1) throw std::invalid_argument("lemma2_threshold: need delta >= 1");
    return BigInt(delta) * (delta + 1) * k * k <= n;
}

/// n > (delta+2)*k, the condition forcing the candidate set K to be a clique.
inline bool clique_separation(int n, int delta, int k) {
    return BigInt(n) > BigInt(delta + 2) * k;
}

/// tau * (delta+1)^tau * k^(tau-1) * C(n-tau, k-tau), for 2 <= tau <= k.
inline BigInt tau_expression(int n, int k, int delta, int tau) {
    if (tau < 2 || tau > k)
        throw std::invalid_argument("tau_expression: need 2 <= tau <= k");
    using boost::multiprecision::pow;
    BigInt value = tau;
    value *= pow(BigInt(delta + 1), static_cast<unsigned>(tau));
    value *= pow(BigInt(k), static_cast<unsigned>(tau - 1));
    value *= binomial(n - tau, k - tau);
    return value;
}

/// delta*(delta+1)*k*C(n-2,k-2) < C(n-|K|-1, k-1), exact comparison.
inline bool eq_six_holds(int n, int k, int delta, int clique_size) {
    BigInt lhs = BigInt(delta) * (delta + 1) * k * binomial(n - 2, k - 2);
    BigInt rhs = binomial(n - clique_size - 1, k - 1);
    return lhs < rhs;
}

/// C(n,k) - C(n-|K|,k) + C(|K|*(delta-|K|+1), 2)*C(n-|K|-2, k-2)
///   <  C(n,k) - C(n-|K|-1, k),
/// both sides evaluated in full, exactly as printed.
inline bool eq_bound_holds(int n, int k, int delta, int clique_size) {
    BigInt lhs = binomial(n, k) - binomial(n - clique_size, k) +
                 binomial(static_cast<long long>(clique_size) * (delta - clique_size + 1), 2) *
                     binomial(n - clique_size - 2, k - 2);
    BigInt rhs = binomial(n, k) - binomial(n - clique_size - 1, k);
    return lhs < rhs;
}

/// Root of c - (1-c)^(delta+1) = 0 in (0,1), by bisection to width 1e-9.
/// For delta = 2 this is about 0.3177. Strictly decreasing in delta.
inline double conjecture_constant(int delta) {
    if (delta < 1) throw std::invalid_argument("conjecture_constant: need delta >= 1");
    auto f = [delta](double c) {
        double p = 1.0;
        for (int i = 0; i <= delta; ++i) p *= (1.0 - c);
        return c - p;
    };
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-9) {
        double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Everything the bound command reports for one (G,k) instance.
struct BoundReport {
    int n = 0;
    int k = 0;
    int delta = 0;
    int omega = 0;
    BigInt ekr;
    BigInt theorem2;
    std::optional<BigInt> cycle;       // set when G is a cycle
    bool lemma1_ok = false;
    std::optional<bool> lemma2_ok;     // unset when delta = 0
    bool clique_sep_ok = false;
    std::vector<std::pair<int, BigInt>> tau_expr;  // (tau, value) for 2 <= tau <= k
};

inline BoundReport compute_bounds(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("compute_bounds: need k >= 1");
    BoundReport r;
    r.n = g.vertex_count();
    r.k = k;
    r.delta = max_degree(g);
    r.omega = clique_number(g).number;
    r.ekr = ekr_bound(r.n, k);
    r.theorem2 = k >= 2 ? theorem2_bound(r.n, k, r.delta, r.omega)
                        : binomial(r.n, k) - binomial(r.n - r.omega, k);
    if (is_cycle_graph(g) && r.n >= 6 && k >= 2) r.cycle = cycle_formula(r.n, k);
    r.lemma1_ok = lemma1_threshold(r.n, r.delta, r.omega, k);
    if (r.delta >= 1) r.lemma2_ok = lemma2_threshold(r.n, r.delta, k);
    r.clique_sep_ok = clique_separation(r.n, r.delta, k);
    for (int tau = 2; tau <= k; ++tau) r.tau_expr.emplace_back(tau, tau_expression(r.n, k, r.delta, tau));
    return r;
}

}  // namespace gint
