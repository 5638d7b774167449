#ifndef PAFP_DP_SOLVERS_HPP
#define PAFP_DP_SOLVERS_HPP

#include "pafp/classify.hpp"
#include "pafp/core.hpp"

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <vector>

namespace pafp {

/// Dense n x n byte table, row-major.
template <typename T>
class Table {
public:
    Table() = default;
    Table(int n, T fill) : n_(n), cells_(static_cast<std::size_t>(n) * n, fill) {}

    int size() const noexcept { return n_; }
    T operator()(int r, int c) const noexcept { return cells_[index(r, c)]; }
    T& operator()(int r, int c) noexcept { return cells_[index(r, c)]; }

    bool operator==(const Table&) const = default;

private:
    std::size_t index(int r, int c) const noexcept
    {
        return static_cast<std::size_t>(r) * n_ + static_cast<std::size_t>(c);
    }

    int n_ = 0;
    std::vector<T> cells_;
};

using BoolTable = Table<std::uint8_t>;

/// P[u][v]: a safe u-v path exists. J[u][v]: defined when a pair (q,v) exists
/// with u < q; true iff a safe u-v path exists whose first edge jumps over q.
/// Undefined J cells hold false.
struct DpTables {
    int n = 0;
    BoolTable P;
    BoolTable J;
    std::vector<int> pair_end;  // pair_end[v] = q for the pair (q,v), else -1

    bool j_defined(int u, int v) const noexcept { return pair_end[v] >= 0 && u < pair_end[v]; }
    bool operator==(const DpTables&) const = default;
};

/// pair_end table for an endpoint-distinct instance.
std::vector<int> pair_ends(const Instance& instance);

/// Throws SharedEndpoint or WrongClass unless the instance classifies into
/// one of `allowed`.
Classification require_class(const Instance& instance, std::initializer_list<StructureClass> allowed,
                             const char* solver);

struct OracleOptions {
    std::size_t max_pairs = 20;
    std::size_t max_states = 4'000'000;
};

/// Exact exponential solver: memoized DFS on (vertex, open pairs), where an
/// open pair has one member visited and the other still ahead.
SolveResult brute_force_solve(const Instance& instance, const OracleOptions& options = {});

/// Linear sweep for pairwise-disjoint pair intervals.
SolveResult solve_disjoint(const Instance& instance);

/// Cubic interval DP over P and J, filled row by row from the bottom.
DpTables build_dp_tables(const Instance& instance);

/// Safe u-v path replayed from the tables; nullopt when P[u][v] is false.
std::optional<Path> reconstruct_path(const Instance& instance, const DpTables& tables, int u,
                                     int v);

SolveResult solve_well_parenthesized(const Instance& instance);

/// Contraction / edge removal / pair removal to a fixpoint. Existence only.
SolveResult solve_by_rules(const Instance& instance);

SolveResult solve_halving(const Instance& instance);

struct AutoOptions {
    bool use_matrix = false;
    int base_span = 64;
    OracleOptions oracle;
};

/// Splits shared endpoints, classifies and dispatches. The witness is mapped
/// back to the input's vertex indices.
SolveResult solve_auto(const Instance& instance, const AutoOptions& options = {});

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Minimum number of fully contained pairs over u-v paths; kUnreachable
/// when no path exists. For a pair cell (q,v) the value counts that pair.
struct ViolationTables {
    int n = 0;
    Table<int> P;
    Table<int> J;
    std::vector<int> pair_end;
};

ViolationTables build_violation_tables(const Instance& instance);

struct MinViolationsResult {
    std::optional<int> count;  // nullopt: target unreachable
    std::optional<Path> path;
};

MinViolationsResult solve_min_violations(const Instance& instance);

}  // namespace pafp

#endif
