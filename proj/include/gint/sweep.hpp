#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "gint/bounds.hpp"
#include "gint/errors.hpp"
#include "gint/family.hpp"
#include "gint/solver.hpp"

namespace gint {

enum class SweepMode { exact, bounds_only };

/// One (n,k) cell of the cycle sweep. In bounds-only mode the construction
/// column is the closed-form size of the cycle-extremal family (the
/// enumeration identity is validated separately at desk scale); in exact
/// mode the family is materialized and counted.
struct SweepRow {
    int n = 0;
    int k = 0;
    BigInt formula;                 // cycle_formula(n,k)
    BigInt construction;            // size of the cycle-extremal family
    std::optional<BigInt> exact;    // solve_exact value (exact mode only)
    double ratio = 0.0;             // (exact or formula) / C(n,k)
    double k_over_n = 0.0;
    std::string status = "ok";
};

inline double big_ratio(const BigInt& num, const BigInt& den) {
    using boost::multiprecision::cpp_rational;
    return static_cast<double>(cpp_rational(num, den));
}

/// Streams one row per (n,k) cell through `emit`. Capacity errors in exact
/// mode are recorded in the row's status, not fatal.
template <typename Fn>
void sweep_cycle(int n_lo, int n_hi, int k_lo, int k_hi, SweepMode mode, Fn&& emit,
                 const SolveOptions& opt = {}) {
    if (n_lo < 6 || n_lo > n_hi) throw std::invalid_argument("sweep_cycle: bad n range (n >= 6)");
    if (k_lo < 2 || k_lo > k_hi) throw std::invalid_argument("sweep_cycle: bad k range (k >= 2)");
    for (int n = n_lo; n <= n_hi; ++n) {
        for (int k = k_lo; k <= k_hi; ++k) {
            SweepRow row;
            row.n = n;
            row.k = k;
            row.k_over_n = static_cast<double>(k) / n;
            if (k > n) {
                row.status = "skipped: k > n";
                emit(row);
                continue;
            }
            row.formula = cycle_formula(n, k);
            BigInt total = binomial(n, k);
            if (mode == SweepMode::exact) {
                if (n > kMaxVertices) {
                    row.construction = row.formula;
                    row.ratio = big_ratio(row.formula, total);
                    row.status = "capacity_exceeded: n=" + std::to_string(n) +
                                 " exceeds compiled vertex capacity " + std::to_string(kMaxVertices);
                    emit(row);
                    continue;
                }
                if (total > opt.vertex_budget) {
                    // too large to enumerate; report the cell instead of failing
                    row.construction = row.formula;
                    row.ratio = big_ratio(row.formula, total);
                    row.status = "capacity_exceeded: C(" + std::to_string(n) + "," +
                                 std::to_string(k) + ")=" + total.str() + " exceeds vertex budget " +
                                 std::to_string(opt.vertex_budget);
                    emit(row);
                    continue;
                }
                row.construction = static_cast<long long>(build_cycle_extremal(n, k).size());
                SolveResult res = solve_exact(cycle_graph(n), k, opt);
                row.exact = BigInt(res.value);
                row.ratio = big_ratio(*row.exact, total);
            } else {
                row.construction = row.formula;
                row.ratio = big_ratio(row.formula, total);
            }
            emit(row);
        }
    }
}

}  // namespace gint
