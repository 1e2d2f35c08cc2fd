// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
//
// Solver values asserted here were pinned from the independent naive oracle
// and the closed-form evaluators before the build; asymptotic statements are
// enforced exactly where their hypothesis regime holds and recorded (not
// asserted) elsewhere.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gint/gint.hpp"

using namespace gint;
using clk = std::chrono::steady_clock;

namespace {

double seconds_since(clk::time_point t0) {
    return std::chrono::duration<double>(clk::now() - t0).count();
}

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back("violation: " + what);
        }
    }
    void note(const std::string& what) { notes.push_back(what); }
};

void report(int idx, const std::string& title, const Outcome& o) {
    std::printf("[%s] criterion %d: %s\n", o.ok ? "PASS" : "FAIL", idx, title.c_str());
    for (const auto& n : o.notes) std::printf("       %s\n", n.c_str());
    std::fflush(stdout);
}

struct Instance {
    std::string name;
    Graph g;
    int k;
    SolveResult res;
};

std::vector<Graph> builtins(int n) {
    std::vector<Graph> gs{empty_graph(n), path_graph(n), complete_graph(n)};
    if (n >= 3) gs.push_back(cycle_graph(n));
    return gs;
}

std::string builtin_name(std::size_t i, int n) {
    static const char* names[] = {"empty", "path", "complete", "cycle"};
    return std::string(names[i]) + ":" + std::to_string(n);
}

int exhaustive_tau(const Hypergraph& h) {
    int n = h.ground_size();
    for (int size = 0; size <= n; ++size) {
        bool found = false;
        for_each_ksubset(n, size, [&](const VertexSet& cand) {
            if (found) return;
            for (const auto& e : h.edges())
                if (!e.intersects(cand)) return;
            found = true;
        });
        if (found) return size;
    }
    return n;
}

}  // namespace

int main() {
    bool all_ok = true;
    std::vector<Instance> instances;  // shared by criteria 1-4 and 6

    // ------------------------------------------------------------------
    // 1. Oracle equivalence on the builtin grid
    // ------------------------------------------------------------------
    {
        Outcome o;
        auto t0 = clk::now();
        int cells = 0;
        for (int n = 5; n <= 9; ++n) {
            auto gs = builtins(n);
            for (std::size_t gi = 0; gi < gs.size(); ++gi) {
                for (int k : {2, 3}) {
                    if (binomial(n, k) > 126) continue;
                    SolveResult fast = solve_exact(gs[gi], k);
                    SolveResult slow = naive_solve(gs[gi], k);
                    ++cells;
                    o.require(fast.value == slow.value,
                              builtin_name(gi, n) + " k=" + std::to_string(k) + ": solve_exact=" +
                                  std::to_string(fast.value) + " naive=" +
                                  std::to_string(slow.value));
                    instances.push_back({builtin_name(gi, n), gs[gi], k, fast});
                }
            }
        }
        double elapsed = seconds_since(t0);
        o.require(elapsed < 600.0, "suite exceeded 10 minutes");
        o.note(std::to_string(cells) + " instances, " + std::to_string(elapsed) + " s");
        report(1, "solve_exact matches the naive oracle on every grid instance", o);
        all_ok &= o.ok;
    }

    // ------------------------------------------------------------------
    // 2. Erdos-Ko-Rado reproduction on empty graphs
    // ------------------------------------------------------------------
    {
        Outcome o;
        int cells = 0;
        for (int n = 4; n <= 10; ++n) {
            for (int k = 1; 2 * k <= n; ++k) {
                SolveResult r = solve_exact(empty_graph(n), k);
                ++cells;
                o.require(BigInt(r.value) == binomial(n - 1, k - 1),
                          "empty:" + std::to_string(n) + " k=" + std::to_string(k) + ": value " +
                              std::to_string(r.value) + " != C(n-1,k-1)");
                instances.push_back({"empty:" + std::to_string(n), empty_graph(n), k, r});
            }
        }
        o.note(std::to_string(cells) + " instances");
        report(2, "N(empty:n, k) = C(n-1, k-1) for 4 <= n <= 10, k <= n/2", o);
        all_ok &= o.ok;
    }

    // ------------------------------------------------------------------
    // 3. Cycle formula at k=2, plus recorded k=3 cells
    // ------------------------------------------------------------------
    std::vector<Instance> cycle_k2;
    {
        Outcome o;
        for (int n = 8; n <= 13; ++n) {
            SolveResult r = solve_exact(cycle_graph(n), 2);
            o.require(BigInt(r.value) == cycle_formula(n, 2),
                      "cycle:" + std::to_string(n) + " k=2: value " + std::to_string(r.value) +
                          " != formula " + cycle_formula(n, 2).str());
            Instance inst{"cycle:" + std::to_string(n), cycle_graph(n), 2, r};
            cycle_k2.push_back(inst);
            instances.push_back(inst);
        }
        // the two k=3 cells: run in exact mode, record agreement, < 60 s each
        for (int n : {10, 11}) {
            auto t0 = clk::now();
            std::vector<SweepRow> rows;
            sweep_cycle(n, n, 3, 3, SweepMode::exact, [&](const SweepRow& r) { rows.push_back(r); });
            double cell = seconds_since(t0);
            o.require(cell < 60.0,
                      "(" + std::to_string(n) + ",3) took " + std::to_string(cell) + " s");
            const SweepRow& row = rows.at(0);
            bool agrees = row.exact && *row.exact == row.formula;
            o.note("sweep report (" + std::to_string(n) + ",3): exact=" +
                   (row.exact ? row.exact->str() : "-") + " formula=" + row.formula.str() +
                   " agreement=" + (agrees ? "yes" : "no") + " (recorded), " +
                   std::to_string(cell) + " s");
            instances.push_back({"cycle:" + std::to_string(n), cycle_graph(n), 3,
                                 solve_exact(cycle_graph(n), 3)});
        }
        report(3, "N(cycle:n, 2) = cycle_formula(n,2) for 8 <= n <= 13", o);
        all_ok &= o.ok;
    }

    // ------------------------------------------------------------------
    // 4. Theorem-2 bound in its hypothesis regime + extremal structure
    // ------------------------------------------------------------------
    {
        Outcome o;
        int in_regime = 0, outside_above = 0;
        for (const Instance& inst : instances) {
            int delta = max_degree(inst.g);
            int omega = clique_number(inst.g).number;
            int n = inst.g.vertex_count();
            BigInt bound = inst.k >= 2 ? theorem2_bound(n, inst.k, delta, omega)
                                       : binomial(n, inst.k) - binomial(n - omega, inst.k);
            bool regime = lemma1_threshold(n, delta, omega, inst.k) &&
                          (delta == 0 || lemma2_threshold(n, delta, inst.k));
            if (regime) {
                ++in_regime;
                o.require(BigInt(inst.res.value) <= bound,
                          inst.name + " k=" + std::to_string(inst.k) + ": value " +
                              std::to_string(inst.res.value) + " > theorem2 " + bound.str() +
                              " inside the lemma regime");
            } else if (BigInt(inst.res.value) > bound) {
                ++outside_above;  // expected at small n: the theorem is asymptotic
            }
        }
        o.note(std::to_string(in_regime) + " instances inside the lemma regime (bound enforced); " +
               std::to_string(outside_above) + " outside it exceed the bound (recorded)");
        for (const Instance& inst : cycle_k2) {
            StructureReport rep = verify_extremal_structure(inst.g, inst.k, inst.res);
            o.require(rep.any_clique_qualifies,
                      inst.name + " k=2: no maximum clique K has its full H_K inside the witness");
            o.require(rep.within_theorem2, inst.name + " k=2: value exceeds theorem2");
        }
        report(4, "theorem2 bound holds in regime; cycle witnesses contain a full H_K", o);
        all_ok &= o.ok;
    }

    // ------------------------------------------------------------------
    // 5 + 6a. Construction identities across the grid, with the cross
    // condition checked on every family the grid generates
    // ------------------------------------------------------------------
    bool grid_cross_ok = true;
    int grid_cells = 0;
    {
        Outcome o;
        double t_identity = 0.0, t_cross = 0.0;
        for (int n = 6; n <= 40; ++n) {
            Graph cyc = cycle_graph(n);
            for (int k = 2; k <= 5 && k <= n; ++k) {
                ++grid_cells;
                auto t0 = clk::now();
                Hypergraph ext = build_cycle_extremal(n, k);
                o.require(BigInt(ext.size()) ==
                              binomial(n, k) - binomial(n - 2, k) + binomial(n - 4, k - 2),
                          "cycle-extremal size mismatch at n=" + std::to_string(n) +
                              " k=" + std::to_string(k));
                o.require(is_g_intersecting(cyc, ext),
                          "cycle-extremal not G-intersecting at n=" + std::to_string(n) +
                              " k=" + std::to_string(k));
                Hypergraph hk = build_clique_family(cyc, VertexSet{1, 2}, k);
                o.require(BigInt(hk.size()) == binomial(n, k) - binomial(n - 2, k),
                          "clique-family size mismatch at n=" + std::to_string(n) +
                              " k=" + std::to_string(k));
                t_identity += seconds_since(t0);

                auto t1 = clk::now();
                if (!check_cross_condition(cyc, ext) || !check_cross_condition(cyc, hk))
                    grid_cross_ok = false;
                t_cross += seconds_since(t1);
            }
        }
        o.require(t_identity < 300.0, "identity grid exceeded 5 minutes");
        o.note(std::to_string(grid_cells) + " cells; identities " + std::to_string(t_identity) +
               " s, cross condition " + std::to_string(t_cross) + " s");
        report(5, "construction size identities and validity for 6 <= n <= 40, 2 <= k <= 5", o);
        all_ok &= o.ok;
    }

    // ------------------------------------------------------------------
    // 6. Cover-number oracle agreement + cross condition everywhere
    // ------------------------------------------------------------------
    {
        Outcome o;
        std::mt19937 rng(424243);
        int done = 0;
        while (done < 200) {
            int n = 1 + static_cast<int>(rng() % 12);
            int m = 1 + static_cast<int>(rng() % 12);
            std::vector<VertexSet> edges;
            std::set<std::vector<int>> seen;
            for (int i = 0; i < m; ++i) {
                VertexSet e;
                while (e.empty())
                    for (int v = 0; v < n; ++v)
                        if (rng() % 3 == 0) e.add(v);
                if (seen.insert(e.elements()).second) edges.push_back(e);
            }
            Hypergraph h(n, edges);
            CoverResult r = cover_number(h);
            int oracle = exhaustive_tau(h);
            o.require(r.tau == oracle, "cover_number " + std::to_string(r.tau) +
                                           " != exhaustive " + std::to_string(oracle));
            bool covers = true;
            for (const auto& e : h.edges())
                if (!e.intersects(r.cover)) covers = false;
            o.require(covers && r.cover.count() == r.tau, "cover witness invalid");
            ++done;
        }
        o.note("200 random hypergraphs matched the exhaustive cover search");
        for (const Instance& inst : instances)
            o.require(check_cross_condition(inst.g, inst.res.witness),
                      "cross condition failed for a solver witness (" + inst.name + ")");
        o.require(grid_cross_ok, "cross condition failed on a criterion-5 family");
        o.note("cross condition held for " + std::to_string(instances.size()) +
               " solver witnesses and all " + std::to_string(2 * grid_cells) + " grid families");
        report(6, "tau machinery matches exhaustive search; cross condition always holds", o);
        all_ok &= o.ok;
    }

    // ------------------------------------------------------------------
    // 7. Monotone decrease of the tau expression inside the lemma-1 regime
    // ------------------------------------------------------------------
    {
        Outcome o;
        long long checked = 0;
        for (int delta = 0; delta <= 4; ++delta) {
            for (int omega = 1; omega <= delta + 1; ++omega) {
                for (int k = 3; k <= 12; ++k) {
                    for (int n = k; n <= 200; ++n) {
                        if (!lemma1_threshold(n, delta, omega, k)) continue;
                        for (int tau = 2; tau + 1 <= k; ++tau) {
                            ++checked;
                            if (tau_expression(n, k, delta, tau) <
                                tau_expression(n, k, delta, tau + 1)) {
                                o.require(false, "increase at n=" + std::to_string(n) +
                                                     " k=" + std::to_string(k) + " delta=" +
                                                     std::to_string(delta) + " tau=" +
                                                     std::to_string(tau));
                            }
                        }
                    }
                }
            }
        }
        o.note(std::to_string(checked) + " adjacent-tau comparisons, exhaustive");
        report(7, "tau expression is non-increasing in tau for n <= 200, k <= 12, delta <= 4", o);
        all_ok &= o.ok;
    }

    // ------------------------------------------------------------------
    // 8. k = 1 identity N(G,1) = omega(G)
    // ------------------------------------------------------------------
    {
        Outcome o;
        int cells = 0;
        for (int n = 1; n <= 12; ++n) {
            auto gs = builtins(n);
            for (std::size_t gi = 0; gi < gs.size(); ++gi) {
                SolveResult r = solve_exact(gs[gi], 1);
                ++cells;
                o.require(static_cast<int>(r.value) == clique_number(gs[gi]).number,
                          builtin_name(gi, n) + ": N(G,1)=" + std::to_string(r.value) +
                              " != omega");
            }
        }
        o.note(std::to_string(cells) + " builtin graphs");
        report(8, "N(G,1) equals the clique number for every builtin with n <= 12", o);
        all_ok &= o.ok;
    }

    // ------------------------------------------------------------------
    // 9. Conjecture exploration artifact
    // ------------------------------------------------------------------
    {
        Outcome o;
        double c2 = conjecture_constant(2);
        o.require(std::abs(c2 - 0.3177) <= 1e-3,
                  "conjecture_constant(2) = " + std::to_string(c2) + " not within 1e-3 of 0.3177");
        for (int n : {50, 100, 200}) {
            std::ostringstream csv;
            csv << kSweepCsvHeader << '\n';
            sweep_cycle(n, n, 2, 10, SweepMode::bounds_only,
                        [&](const SweepRow& row) { csv << to_csv(row) << '\n'; });
            // parse it back and require ratio strictly increasing in k
            std::istringstream lines(csv.str());
            std::string line;
            std::getline(lines, line);
            o.require(line == kSweepCsvHeader, "csv header mismatch");
            double prev = -1.0;
            int rows = 0;
            while (std::getline(lines, line)) {
                if (line.empty()) continue;
                std::vector<std::string> cols;
                std::istringstream ls(line);
                std::string col;
                while (std::getline(ls, col, ',')) cols.push_back(col);
                o.require(cols.size() == 8, "csv row does not have 8 columns: " + line);
                double ratio = std::stod(cols.at(5));
                o.require(ratio > prev, "ratio not strictly increasing at n=" + cols.at(0) +
                                            " k=" + cols.at(1));
                prev = ratio;
                ++rows;
            }
            o.require(rows == 9, "expected 9 rows for n=" + std::to_string(n));
        }
        o.note("conjecture_constant(2) = " + std::to_string(c2));
        report(9, "bounds-only sweep emits parseable CSV with monotone ratio column", o);
        all_ok &= o.ok;
    }

    std::printf("%s\n", all_ok ? "acceptance: all criteria passed" : "acceptance: FAILURES above");
    return all_ok ? 0 : 1;
}
