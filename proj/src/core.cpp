#include "pafp/core.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace pafp {

const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::SharedEndpoint: return "SharedEndpoint";
    case ErrorCode::WrongClass: return "WrongClass";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NoSuchPair: return "NoSuchPair";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::Semantic: return "SemanticError";
    }
    return "Unknown";
}

Instance make_instance(int n, std::vector<Edge> edges, std::vector<ForbiddenPair> pairs,
                       int source, int target)
{
    for (auto& p : pairs)
        if (p.left > p.right)
            std::swap(p.left, p.right);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return Instance{n, std::move(edges), std::move(pairs), source, target};
}

namespace {

std::string fmt_edge(const char* what, int u, int v)
{
    std::ostringstream os;
    os << what << ": (" << u << "," << v << ")";
    return os.str();
}

std::string fmt_pair(const char* what, const ForbiddenPair& p)
{
    std::ostringstream os;
    os << what << ": {" << p.left << "," << p.right << "}";
    return os.str();
}

bool in_range(int v, int n) { return v >= 0 && v < n; }

}  // namespace

std::vector<std::string> validate(const Instance& instance)
{
    std::vector<std::string> out;
    const int n = instance.n;
    if (n < 2)
        out.push_back("vertex count below 2: n=" + std::to_string(n));
    if (!in_range(instance.source, n))
        out.push_back("source out of range: " + std::to_string(instance.source));
    if (!in_range(instance.target, n))
        out.push_back("target out of range: " + std::to_string(instance.target));
    if (instance.source >= instance.target)
        out.push_back("source not before target: s=" + std::to_string(instance.source) +
                      " t=" + std::to_string(instance.target));

    for (const auto& e : instance.edges) {
        if (!in_range(e.from, n) || !in_range(e.to, n))
            out.push_back(fmt_edge("edge endpoint out of range", e.from, e.to));
        else if (e.from == e.to)
            out.push_back(fmt_edge("self-loop", e.from, e.to));
        else if (e.from > e.to)
            out.push_back(fmt_edge("edge not forward", e.from, e.to));
    }
    if (!std::is_sorted(instance.edges.begin(), instance.edges.end()) ||
        std::adjacent_find(instance.edges.begin(), instance.edges.end()) != instance.edges.end())
        out.push_back("edge list not canonical (unsorted or duplicated)");

    for (const auto& p : instance.pairs) {
        if (!in_range(p.left, n) || !in_range(p.right, n))
            out.push_back(fmt_pair("pair member out of range", p));
        else if (p.left == p.right)
            out.push_back(fmt_pair("degenerate pair", p));
        else if (p.left > p.right)
            out.push_back(fmt_pair("pair not normalized", p));
    }
    if (!std::is_sorted(instance.pairs.begin(), instance.pairs.end()) ||
        std::adjacent_find(instance.pairs.begin(), instance.pairs.end()) != instance.pairs.end())
        out.push_back("pair list not canonical (unsorted or duplicated)");
    return out;
}

bool is_valid(const Instance& instance) { return validate(instance).empty(); }

Adjacency adjacency(const Instance& instance)
{
    Adjacency adj;
    adj.out.resize(instance.n);
    adj.in.resize(instance.n);
    // edges are sorted by (from, to), so out-lists come out ascending
    for (const auto& e : instance.edges) {
        adj.out[e.from].push_back(e.to);
        adj.in[e.to].push_back(e.from);
    }
    for (auto& l : adj.in)
        std::sort(l.begin(), l.end());
    return adj;
}

void check_path_structure(const Instance& instance, const Path& path)
{
    if (path.empty())
        throw Error(ErrorCode::InvalidPath, "empty path");
    if (path.front() != instance.source)
        throw Error(ErrorCode::InvalidPath,
                    "path does not start at source " + std::to_string(instance.source));
    if (path.back() != instance.target)
        throw Error(ErrorCode::InvalidPath,
                    "path does not end at target " + std::to_string(instance.target));
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const Edge e{path[i], path[i + 1]};
        if (!std::binary_search(instance.edges.begin(), instance.edges.end(), e))
            throw Error(ErrorCode::InvalidPath, fmt_edge("no such edge", e.from, e.to));
    }
}

std::optional<ForbiddenPair> first_violated_pair(const Instance& instance, const Path& path)
{
    std::vector<char> on_path(instance.n, 0);
    for (int v : path)
        if (in_range(v, instance.n))
            on_path[v] = 1;
    for (const auto& p : instance.pairs)
        if (on_path[p.left] && on_path[p.right])
            return p;
    return std::nullopt;
}

bool verify_safe(const Instance& instance, const Path& path)
{
    check_path_structure(instance, path);
    return !first_violated_pair(instance, path).has_value();
}

PruneResult reachability_prune(const Instance& instance)
{
    const int n = instance.n;
    const auto adj = adjacency(instance);
    std::vector<char> fwd(n, 0), bwd(n, 0);
    fwd[instance.source] = 1;
    for (int v = instance.source; v < n; ++v)
        if (fwd[v])
            for (int w : adj.out[v])
                fwd[w] = 1;
    bwd[instance.target] = 1;
    for (int v = instance.target; v >= 0; --v)
        if (bwd[v])
            for (int w : adj.in[v])
                bwd[w] = 1;

    PruneResult r;
    r.old_to_new.assign(n, -1);
    if (!fwd[instance.target]) {
        r.instance = make_instance(2, {}, {}, 0, 1);
        r.target_unreachable = true;
        r.dropped_pairs = static_cast<int>(instance.pairs.size());
        return r;
    }
    for (int v = 0; v < n; ++v) {
        if (fwd[v] && bwd[v]) {
            r.old_to_new[v] = static_cast<int>(r.new_to_old.size());
            r.new_to_old.push_back(v);
        }
    }
    std::vector<Edge> edges;
    for (const auto& e : instance.edges) {
        const int a = r.old_to_new[e.from], b = r.old_to_new[e.to];
        if (a >= 0 && b >= 0)
            edges.push_back({a, b});
    }
    std::vector<ForbiddenPair> pairs;
    for (const auto& p : instance.pairs) {
        const int a = r.old_to_new[p.left], b = r.old_to_new[p.right];
        if (a >= 0 && b >= 0)
            pairs.push_back({a, b});
        else
            ++r.dropped_pairs;
    }
    r.instance = make_instance(static_cast<int>(r.new_to_old.size()), std::move(edges),
                               std::move(pairs), r.old_to_new[instance.source],
                               r.old_to_new[instance.target]);
    return r;
}

Path map_path(const Path& path, const std::vector<int>& mapping)
{
    Path out;
    out.reserve(path.size());
    for (int v : path) {
        const int m = mapping.at(v);
        if (out.empty() || out.back() != m)
            out.push_back(m);
    }
    return out;
}

std::vector<std::string> validate(const Formula3Sat& formula)
{
    std::vector<std::string> out;
    if (formula.num_vars < 1)
        out.push_back("formula has no variables");
    for (std::size_t i = 0; i < formula.clauses.size(); ++i)
        for (const auto& lit : formula.clauses[i])
            if (lit.var < 1 || lit.var > formula.num_vars)
                out.push_back("clause " + std::to_string(i + 1) + ": variable out of range: " +
                              std::to_string(lit.var));
    return out;
}

bool evaluate(const Formula3Sat& formula, const std::vector<bool>& assignment)
{
    for (const auto& clause : formula.clauses) {
        bool sat = false;
        for (const auto& lit : clause) {
            const bool value = assignment.at(lit.var - 1);
            if (value != lit.negated) {
                sat = true;
                break;
            }
        }
        if (!sat)
            return false;
    }
    return true;
}

}  // namespace pafp
