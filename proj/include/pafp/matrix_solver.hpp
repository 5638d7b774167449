#ifndef PAFP_MATRIX_SOLVER_HPP
#define PAFP_MATRIX_SOLVER_HPP

#include "pafp/bit_matrix.hpp"
#include "pafp/dp_solvers.hpp"

#include <cstdint>

namespace pafp {

/// All inside properties of the interval DP as row-packed bit matrices,
/// indexed by cell (u, v) with u <= v. The mu_* matrices hold the accumulated
/// products
///   mu_jump[u][v]  = OR_{u<w<v} A[u][w] & P_after[w][v]
///   mu_alpha[u][v] = OR_{u<w<v} P[u][w] & A[w][v]
///   mu_beta[u][v]  = OR_{u<w<v} P[u][w] & J[w][v]
/// where P_after / P_before are P restricted to rows after / before the left
/// member of the pair ending in the column (false in pair-free columns).
/// Only cells u < v are stored; the trivially true diagonal of P is left clear.
struct InsideProperties {
    BitMatrix A;
    BitMatrix J;
    BitMatrix P;
    BitMatrix P_after;
    BitMatrix P_before;
    BitMatrix mu_jump;
    BitMatrix mu_alpha;
    BitMatrix mu_beta;
    std::vector<int> pair_end;
};

struct MatrixOptions {
    int base_span = 64;
    /// After each combine step, recompute a few cross cells from the
    /// definition and compare with the accumulators (throws std::logic_error).
    bool check_invariants = false;
    std::uint64_t check_seed = 1;
};

struct MatrixStats {
    std::uint64_t combine_steps = 0;
    std::uint64_t product_calls = 0;
    std::uint64_t base_cells = 0;
    std::uint64_t invariant_checks = 0;
};

/// Divide and conquer over the vertex order: solve both halves, then fill the
/// cross rectangle recursively, feeding it with block boolean products.
InsideProperties matrix_build_properties(const Instance& instance,
                                         const MatrixOptions& options = {},
                                         MatrixStats* stats = nullptr);

/// Same P and J tables as build_dp_tables, cell for cell.
DpTables matrix_build(const Instance& instance, int base_span = 64);

DpTables to_dp_tables(const InsideProperties& props);

SolveResult solve_matrix(const Instance& instance, int base_span = 64);

}  // namespace pafp

#endif
