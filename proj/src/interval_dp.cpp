#include "pafp/dp_solvers.hpp"

#include "stopwatch.hpp"

#include <algorithm>
#include <sstream>

namespace pafp {

std::vector<int> pair_ends(const Instance& instance)
{
    std::vector<int> end(instance.n, -1);
    for (const auto& p : instance.pairs)
        end[p.right] = p.left;
    return end;
}

Classification require_class(const Instance& instance, std::initializer_list<StructureClass> allowed,
                             const char* solver)
{
    if (has_shared_endpoints(instance))
        throw Error(ErrorCode::SharedEndpoint,
                    std::string(solver) + " needs endpoint-distinct pairs; split shared vertices first");
    const auto c = classify_instance(instance);
    if (std::find(allowed.begin(), allowed.end(), c.kind) == allowed.end()) {
        std::ostringstream os;
        os << solver << " does not apply: instance is " << to_string(c.kind) << ", expected one of";
        for (auto a : allowed)
            os << ' ' << to_string(a);
        throw Error(ErrorCode::WrongClass, os.str());
    }
    return c;
}

// ---------------------------------------------------------------------------
// disjoint intervals: one forward sweep with two states per vertex

SolveResult solve_disjoint(const Instance& instance)
{
    require_class(instance, {StructureClass::Disjoint}, "disjoint solver");
    Stopwatch sw;
    const int n = instance.n;
    const auto adj = adjacency(instance);

    // enclosing[x] = index of the pair interval [l, r] containing x, or -1
    std::vector<int> enclosing(n, -1);
    std::vector<char> is_left(n, 0), is_right(n, 0);
    for (int i = 0; i < static_cast<int>(instance.pairs.size()); ++i) {
        const auto& p = instance.pairs[i];
        for (int x = p.left; x <= p.right; ++x)
            enclosing[x] = i;
        is_left[p.left] = 1;
        is_right[p.right] = 1;
    }

    // state 1: the left member of the enclosing pair is on the path
    struct Back {
        int vertex = -1;
        int state = -1;
    };
    std::vector<std::array<char, 2>> reach(n, {0, 0});
    std::vector<std::array<Back, 2>> back(n);
    const int s = instance.source, t = instance.target;
    reach[s][is_left[s]] = 1;

    for (int x = s; x < t; ++x) {
        for (int st = 0; st < 2; ++st) {
            if (!reach[x][st])
                continue;
            for (int y : adj.out[x]) {
                if (y > t)
                    break;
                int ns;
                if (enclosing[y] >= 0 && enclosing[y] == enclosing[x]) {
                    if (st == 1 && is_right[y])
                        continue;
                    ns = st;
                } else {
                    ns = is_left[y];
                }
                if (!reach[y][ns]) {
                    reach[y][ns] = 1;
                    back[y][ns] = {x, st};
                }
            }
        }
    }

    SolveResult r;
    r.stats.solver = "disjoint";
    r.stats.route = "disjoint";
    r.stats.cells = static_cast<std::uint64_t>(n) * 2;
    for (int st = 0; st < 2 && !r.found; ++st) {
        if (!reach[t][st])
            continue;
        Path path;
        for (Back b{t, st}; b.vertex >= 0; b = back[b.vertex][b.state])
            path.push_back(b.vertex);
        std::reverse(path.begin(), path.end());
        r.found = true;
        r.path = std::move(path);
    }
    r.stats.elapsed_ms = sw.elapsed_ms();
    return r;
}

// ---------------------------------------------------------------------------
// cubic interval DP

DpTables build_dp_tables(const Instance& instance)
{
    require_class(instance,
                  {StructureClass::Disjoint, StructureClass::Nested, StructureClass::WellParenthesized},
                  "interval DP");
    const int n = instance.n;
    const auto adj = adjacency(instance);
    DpTables t;
    t.n = n;
    t.P = BoolTable(n, 0);
    t.J = BoolTable(n, 0);
    t.pair_end = pair_ends(instance);

    for (int u = 0; u < n; ++u)
        t.P(u, u) = 1;
    // Bottom row first: every cell only reads cells of its own row to the
    // left or of lower rows.
    for (int u = n - 1; u >= 0; --u) {
        for (int v = u + 1; v < n; ++v) {
            const int q = t.pair_end[v];
            if (q > u) {
                bool jump = false;
                for (int w : adj.out[u]) {
                    if (w > v)
                        break;
                    if (w > q && t.P(w, v)) {
                        jump = true;
                        break;
                    }
                }
                t.J(u, v) = jump;
            }

            bool safe = false;
            if (q == u) {
                safe = false;
            } else if (q < u) {
                // no pair ends at v, or its left member lies before u
                const auto& in = adj.in[v];
                for (auto it = std::lower_bound(in.begin(), in.end(), u); it != in.end(); ++it) {
                    if (t.P(u, *it)) {
                        safe = true;
                        break;
                    }
                }
            } else {
                for (int w = u; w < q; ++w) {
                    if (t.P(u, w) && t.J(w, v)) {
                        safe = true;
                        break;
                    }
                }
            }
            t.P(u, v) = safe;
        }
    }
    return t;
}

namespace {

class Replay {
public:
    Replay(const Instance& instance, const DpTables& tables)
        : adj_(adjacency(instance)), t_(tables)
    {
    }

    void emit(int u, int v, Path& out) const
    {
        while (true) {
            if (u == v) {
                out.push_back(u);
                return;
            }
            const int q = t_.pair_end[v];
            if (q < u) {
                const auto& in = adj_.in[v];
                auto it = std::lower_bound(in.begin(), in.end(), u);
                while (!t_.P(u, *it))
                    ++it;
                emit(u, *it, out);
                out.push_back(v);
                return;
            }
            int w = u;
            while (!(t_.P(u, w) && t_.J(w, v)))
                ++w;
            emit(u, w, out);
            auto it = adj_.out[w].begin();
            while (!(*it > q && *it <= v && t_.P(*it, v)))
                ++it;
            u = *it;  // continue with the jump target; tail call on (x, v)
        }
    }

private:
    Adjacency adj_;
    const DpTables& t_;
};

}  // namespace

std::optional<Path> reconstruct_path(const Instance& instance, const DpTables& tables, int u, int v)
{
    if (!tables.P(u, v))
        return std::nullopt;
    Path path;
    Replay(instance, tables).emit(u, v, path);
    return path;
}

SolveResult solve_well_parenthesized(const Instance& instance)
{
    Stopwatch sw;
    const auto tables = build_dp_tables(instance);
    SolveResult r;
    r.path = reconstruct_path(instance, tables, instance.source, instance.target);
    r.found = r.path.has_value();
    r.stats.solver = "cubic";
    r.stats.route = "cubic";
    r.stats.cells = static_cast<std::uint64_t>(instance.n) * (instance.n + 1) / 2;
    r.stats.elapsed_ms = sw.elapsed_ms();
    return r;
}

// ---------------------------------------------------------------------------
// minimum number of contained pairs, (min,+) version of the same recurrences

namespace {

int add_sat(int a, int b)
{
    if (a == kUnreachable || b == kUnreachable)
        return kUnreachable;
    return a + b;
}

}  // namespace

ViolationTables build_violation_tables(const Instance& instance)
{
    require_class(instance,
                  {StructureClass::Disjoint, StructureClass::Nested, StructureClass::WellParenthesized},
                  "min-violations DP");
    const int n = instance.n;
    const auto adj = adjacency(instance);
    ViolationTables t;
    t.n = n;
    t.P = Table<int>(n, kUnreachable);
    t.J = Table<int>(n, kUnreachable);
    t.pair_end = pair_ends(instance);

    for (int u = 0; u < n; ++u)
        t.P(u, u) = 0;
    for (int span = 1; span < n; ++span) {
        for (int u = 0, v = span; v < n; ++u, ++v) {
            const int q = t.pair_end[v];
            if (q > u) {
                int best = kUnreachable;
                for (int w : adj.out[u]) {
                    if (w > v)
                        break;
                    if (w > q)
                        best = std::min(best, t.P(w, v));
                }
                t.J(u, v) = best;
            }

            int best = kUnreachable;
            if (q <= u) {
                const auto& in = adj.in[v];
                for (auto it = std::lower_bound(in.begin(), in.end(), u); it != in.end(); ++it)
                    best = std::min(best, t.P(u, *it));
                if (q == u)
                    best = add_sat(best, 1);
            } else {
                for (int w = u; w < q; ++w)
                    best = std::min(best, add_sat(t.P(u, w), t.J(w, v)));
                best = std::min(best, add_sat(t.P(u, q), t.P(q, v)));
            }
            t.P(u, v) = best;
        }
    }
    return t;
}

namespace {

class MinReplay {
public:
    MinReplay(const Instance& instance, const ViolationTables& tables)
        : adj_(adjacency(instance)), t_(tables)
    {
    }

    void emit(int u, int v, Path& out) const
    {
        if (u == v) {
            out.push_back(u);
            return;
        }
        const int target = t_.P(u, v);
        const int q = t_.pair_end[v];
        if (q <= u) {
            const int need = q == u ? target - 1 : target;
            const auto& in = adj_.in[v];
            auto it = std::lower_bound(in.begin(), in.end(), u);
            while (t_.P(u, *it) != need)
                ++it;
            emit(u, *it, out);
            out.push_back(v);
            return;
        }
        for (int w = u; w < q; ++w) {
            if (add_sat(t_.P(u, w), t_.J(w, v)) != target)
                continue;
            emit(u, w, out);
            auto it = adj_.out[w].begin();
            while (!(*it > q && *it <= v && t_.P(*it, v) == t_.J(w, v)))
                ++it;
            emit(*it, v, out);
            return;
        }
        emit(u, q, out);
        out.pop_back();
        emit(q, v, out);
    }

private:
    Adjacency adj_;
    const ViolationTables& t_;
};

}  // namespace

MinViolationsResult solve_min_violations(const Instance& instance)
{
    const auto t = build_violation_tables(instance);
    MinViolationsResult r;
    const int best = t.P(instance.source, instance.target);
    if (best == kUnreachable)
        return r;
    r.count = best;
    Path path;
    MinReplay(instance, t).emit(instance.source, instance.target, path);
    r.path = std::move(path);
    return r;
}

}  // namespace pafp
