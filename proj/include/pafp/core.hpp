#ifndef PAFP_CORE_HPP
#define PAFP_CORE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pafp {

enum class ErrorCode {
    SharedEndpoint,
    WrongClass,
    BudgetExceeded,
    NonTermination,
    InvalidPath,
    DimensionMismatch,
    LengthMismatch,
    NoSuchPair,
    Infeasible,
    Syntax,
    Semantic,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what, int line = 0)
        : std::runtime_error(what), code_(code), line_(line)
    {
    }

    ErrorCode code() const noexcept { return code_; }
    /// 1-based line of the offending input, 0 when not line-addressed.
    int line() const noexcept { return line_; }

private:
    ErrorCode code_;
    int line_;
};

struct Edge {
    int from = 0;
    int to = 0;
    auto operator<=>(const Edge&) const = default;
};

/// Stored normalized: left < right.
struct ForbiddenPair {
    int left = 0;
    int right = 0;
    auto operator<=>(const ForbiddenPair&) const = default;
};

/// A topologically indexed DAG with forbidden pairs. Vertices are 0..n-1 and
/// the index order is the linear order every algorithm works against.
struct Instance {
    int n = 0;
    std::vector<Edge> edges;           // sorted, unique
    std::vector<ForbiddenPair> pairs;  // sorted, unique, left < right
    int source = 0;
    int target = 0;

    bool operator==(const Instance&) const = default;
};

/// Builds an instance in canonical form: pairs are oriented left < right,
/// edges and pairs are sorted and deduplicated. Nothing is validated here.
Instance make_instance(int n, std::vector<Edge> edges, std::vector<ForbiddenPair> pairs,
                       int source, int target);

/// Every broken invariant, one message each. Empty means valid.
std::vector<std::string> validate(const Instance& instance);
bool is_valid(const Instance& instance);

struct Adjacency {
    std::vector<std::vector<int>> out;  // ascending
    std::vector<std::vector<int>> in;   // ascending
};

Adjacency adjacency(const Instance& instance);

/// Vertex sequence of a path; strictly increasing for any DAG path.
using Path = std::vector<int>;

/// Throws Error(InvalidPath) unless `path` is an edge-connected source-target path.
void check_path_structure(const Instance& instance, const Path& path);

/// First forbidden pair with both members on the path, if any.
std::optional<ForbiddenPair> first_violated_pair(const Instance& instance, const Path& path);

/// True iff the path contains at most one member of every forbidden pair.
/// Structurally broken paths raise Error(InvalidPath).
bool verify_safe(const Instance& instance, const Path& path);

struct SolveStats {
    std::string solver;
    std::string route;
    double elapsed_ms = 0.0;
    std::uint64_t cells = 0;
    int nested_instances = 0;  // halving driver only
};

/// `found` without a path only for existence-only solvers (the rule solver).
struct SolveResult {
    bool found = false;
    std::optional<Path> path;
    SolveStats stats;
};

struct PruneResult {
    Instance instance;
    std::vector<int> old_to_new;  // -1 for removed vertices
    std::vector<int> new_to_old;
    int dropped_pairs = 0;
    bool target_unreachable = false;
};

/// Keeps only vertices lying on some source-target walk, recompacting indices
/// in order. Pairs losing a member are dropped. An unreachable target yields
/// the two-vertex edgeless instance with `target_unreachable` set.
PruneResult reachability_prune(const Instance& instance);

/// Maps a path through a vertex renaming, collapsing consecutive repeats.
Path map_path(const Path& path, const std::vector<int>& mapping);

struct Literal {
    int var = 1;  // 1-based
    bool negated = false;
    auto operator<=>(const Literal&) const = default;
};

using Clause = std::array<Literal, 3>;

struct Formula3Sat {
    int num_vars = 0;
    std::vector<Clause> clauses;
    bool operator==(const Formula3Sat&) const = default;
};

std::vector<std::string> validate(const Formula3Sat& formula);

/// `assignment[k-1]` is the value of x_k.
bool evaluate(const Formula3Sat& formula, const std::vector<bool>& assignment);

}  // namespace pafp

#endif
