#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "gint/bounds.hpp"
#include "gint/family.hpp"

using namespace gint;

TEST_CASE("ekr_bound") {
    CHECK(ekr_bound(4, 2) == 3);
    CHECK(ekr_bound(6, 3) == 10);
    for (int n : {1, 5, 17, 40}) CHECK(ekr_bound(n, 1) == 1);
    CHECK_THROWS_AS(ekr_bound(5, 0), std::invalid_argument);
}

TEST_CASE("theorem2_bound examples") {
    CHECK(theorem2_bound(6, 2, 2, 2) == 10);    // 15 - 6 + 1*1
    CHECK(theorem2_bound(10, 2, 0, 1) == 9);    // 45 - 36 + 0
    // complete graph: omega = n, delta = n-1, middle factor C(0,2) = 0
    for (int n : {3, 5, 8}) REQUIRE(theorem2_bound(n, 2, n - 1, n) == binomial(n, 2));

    CHECK_THROWS_AS(theorem2_bound(6, 2, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(theorem2_bound(6, 2, 0, 2), std::invalid_argument);  // delta < omega-1
    CHECK_THROWS_AS(theorem2_bound(6, 1, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(theorem2_bound(2, 2, 2, 3), std::invalid_argument);  // n < omega
}

TEST_CASE("theorem2_bound dominates the clique-family size") {
    for (int n = 2; n <= 20; ++n)
        for (int k = 2; k <= 6; ++k)
            for (int omega = 1; omega <= n; ++omega)
                for (int delta = omega - 1; delta <= omega + 3; ++delta)
                    REQUIRE(theorem2_bound(n, k, delta, omega) >=
                            binomial(n, k) - binomial(n - omega, k));
}

TEST_CASE("cycle_formula") {
    CHECK(cycle_formula(6, 2) == 10);
    CHECK(cycle_formula(8, 2) == 14);
    CHECK(cycle_formula(10, 3) == 70);  // 120 - 56 + 6
    CHECK_THROWS_AS(cycle_formula(5, 2), std::invalid_argument);
    CHECK_THROWS_AS(cycle_formula(8, 1), std::invalid_argument);
}

TEST_CASE("cycle_formula equals theorem2_bound at delta = omega = 2") {
    for (int n = 6; n <= 40; ++n)
        for (int k = 2; k <= 7; ++k) REQUIRE(cycle_formula(n, k) == theorem2_bound(n, k, 2, 2));
}

TEST_CASE("cycle_formula matches the materialized construction") {
    for (int n : {6, 9, 12})
        for (int k : {2, 3, 4})
            REQUIRE(cycle_formula(n, k) == BigInt(build_cycle_extremal(n, k).size()));
}

TEST_CASE("lemma1_threshold") {
    CHECK(lemma1_threshold(1000, 2, 2, 10));        // 1800 < 2000
    CHECK_FALSE(lemma1_threshold(1000, 2, 2, 11));  // 2178 >= 2000
    CHECK(lemma1_threshold(5, 3, 1, 0));            // k = 0: trivially under
}

TEST_CASE("lemma2_threshold") {
    CHECK(lemma2_threshold(600, 2, 10));        // 600 <= 600
    CHECK_FALSE(lemma2_threshold(599, 2, 10));  // boundary flip
    CHECK(lemma2_threshold(100, 3, 1));
    CHECK_THROWS_AS(lemma2_threshold(100, 0, 1), std::invalid_argument);
}

TEST_CASE("clique_separation") {
    CHECK(clique_separation(13, 2, 3));        // 13 > 12
    CHECK_FALSE(clique_separation(12, 2, 3));  // 12 > 12 fails
    CHECK(clique_separation(1, 5, 0));
}

TEST_CASE("tau_expression examples") {
    CHECK(tau_expression(20, 4, 2, 2) == 11016);  // 2*9*4*C(18,2)
    CHECK(tau_expression(20, 4, 2, 4) == 20736);  // 4*81*64*C(16,0)
    // tau = k: trailing binomial is C(n-k,0) = 1
    CHECK(tau_expression(9, 3, 1, 3) == BigInt(3) * 8 * 9);
    CHECK_THROWS_AS(tau_expression(20, 4, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(tau_expression(20, 4, 2, 5), std::invalid_argument);
}

TEST_CASE("tau_expression is non-increasing in tau inside the lemma1 regime") {
    // exhaustive over the acceptance grid, omega up to delta+1
    for (int delta = 0; delta <= 4; ++delta) {
        for (int omega = 1; omega <= delta + 1; ++omega) {
            for (int k = 3; k <= 12; ++k) {
                for (int n = k; n <= 200; ++n) {
                    if (!lemma1_threshold(n, delta, omega, k)) continue;
                    for (int tau = 2; tau + 1 <= k; ++tau)
                        REQUIRE(tau_expression(n, k, delta, tau) >=
                                tau_expression(n, k, delta, tau + 1));
                }
            }
        }
    }
}

TEST_CASE("eq_six_holds") {
    CHECK(eq_six_holds(10000, 3, 2, 2));
    CHECK_FALSE(eq_six_holds(5, 3, 1, 2));  // n = k+2: right side collapses
    // k = 2 reduces to a linear comparison
    CHECK(eq_six_holds(100, 2, 2, 2) == (BigInt(2 * 3 * 2) < binomial(97, 1)));
}

TEST_CASE("eq_bound_holds") {
    CHECK(eq_bound_holds(1000, 5, 2, 2));       // k = o(n) regime
    CHECK_FALSE(eq_bound_holds(12, 11, 2, 2));  // k near n
    // |K| = delta+1: middle binomial C(0,2) = 0, left side reduces
    int n = 30, k = 4, delta = 3, ksz = 4;
    bool expect = binomial(n, k) - binomial(n - ksz, k) <
                  binomial(n, k) - binomial(n - ksz - 1, k);
    CHECK(eq_bound_holds(n, k, delta, ksz) == expect);
}

TEST_CASE("conjecture_constant") {
    CHECK(std::abs(conjecture_constant(2) - 0.3177) < 1e-3);
    // delta = 1: root of c = (1-c)^2 is (3 - sqrt(5))/2
    CHECK(std::abs(conjecture_constant(1) - (3.0 - std::sqrt(5.0)) / 2.0) < 1e-8);
    // strictly decreasing in delta
    double prev = conjecture_constant(1);
    for (int delta = 2; delta <= 12; ++delta) {
        double cur = conjecture_constant(delta);
        REQUIRE(cur < prev);
        prev = cur;
    }
    // the returned value is a root to bisection tolerance
    for (int delta : {1, 2, 5, 10}) {
        double c = conjecture_constant(delta);
        double p = 1.0;
        for (int i = 0; i <= delta; ++i) p *= (1.0 - c);
        REQUIRE(std::abs(c - p) < 1e-7);
    }
    CHECK_THROWS_AS(conjecture_constant(0), std::invalid_argument);
}

TEST_CASE("threshold predicates are monotone in k") {
    for (int n : {10, 100, 450}) {
        for (int delta : {1, 2, 4}) {
            for (int omega = 1; omega <= delta + 1; ++omega) {
                bool l1 = true, l2 = true, sep = true;
                for (int k = 1; k <= 40; ++k) {
                    bool c1 = lemma1_threshold(n, delta, omega, k);
                    bool c2 = lemma2_threshold(n, delta, k);
                    bool c3 = clique_separation(n, delta, k);
                    REQUIRE((l1 || !c1));  // once false, stays false
                    REQUIRE((l2 || !c2));
                    REQUIRE((sep || !c3));
                    l1 = c1;
                    l2 = c2;
                    sep = c3;
                }
            }
        }
    }
}

TEST_CASE("compute_bounds assembles a consistent report") {
    BoundReport r = compute_bounds(cycle_graph(12), 3);
    CHECK(r.n == 12);
    CHECK(r.delta == 2);
    CHECK(r.omega == 2);
    CHECK(r.ekr == binomial(11, 2));
    CHECK(r.theorem2 == cycle_formula(12, 3));
    REQUIRE(r.cycle.has_value());
    CHECK(*r.cycle == r.theorem2);
    REQUIRE(r.tau_expr.size() == 2);  // tau = 2, 3
    CHECK(r.tau_expr[0].first == 2);
    CHECK(r.theorem2 >= r.ekr);

    BoundReport e = compute_bounds(empty_graph(9), 2);
    CHECK(e.omega == 1);
    CHECK_FALSE(e.lemma2_ok.has_value());  // edgeless
    CHECK(e.lemma1_ok);                    // 2*1*4 < 9
    CHECK(e.theorem2 == e.ekr);            // star bound
    CHECK_FALSE(e.cycle.has_value());

    // k = 1 report exists and theorem2 falls back to the clique-family size
    BoundReport one = compute_bounds(complete_graph(5), 1);
    CHECK(one.theorem2 == 5);
    CHECK(one.tau_expr.empty());
}

TEST_CASE("BoundReport invariant: theorem2 >= ekr on graph instances") {
    for (int n : {4, 7, 10, 13}) {
        for (int k = 2; k <= n / 2; ++k) {
            for (const Graph& g : {empty_graph(n), path_graph(n), cycle_graph(n), complete_graph(n)}) {
                BoundReport r = compute_bounds(g, k);
                REQUIRE(r.theorem2 >= r.ekr);
            }
        }
    }
}
