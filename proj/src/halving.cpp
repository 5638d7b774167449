#include "pafp/dp_solvers.hpp"
#include "pafp/reductions.hpp"

#include "stopwatch.hpp"

#include <algorithm>
#include <map>

namespace pafp {

namespace {

// Mutable dense graph used while normalizing a halving instance. Edges made
// by contraction remember the vertex they bypass so witnesses can be expanded.
struct WorkGraph {
    int n = 0;
    std::vector<std::vector<char>> edge;
    std::map<std::pair<int, int>, int> via;

    explicit WorkGraph(const Instance& inst) : n(inst.n), edge(inst.n, std::vector<char>(inst.n, 0))
    {
        for (const auto& e : inst.edges)
            edge[e.from][e.to] = 1;
    }

    void contract(int a)
    {
        for (int p = 0; p < a; ++p) {
            if (!edge[p][a])
                continue;
            for (int w = a + 1; w < n; ++w) {
                if (edge[a][w] && !edge[p][w]) {
                    edge[p][w] = 1;
                    via[{p, w}] = a;
                }
            }
        }
        for (int v = 0; v < n; ++v)
            edge[v][a] = edge[a][v] = 0;
    }

    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (edge[u][v])
                    out.push_back({u, v});
        return out;
    }

    void expand(int u, int w, Path& out) const
    {
        if (auto it = via.find({u, w}); it != via.end()) {
            expand(u, it->second, out);
            expand(it->second, w, out);
        } else {
            out.push_back(w);
        }
    }

    Path expand(const Path& path) const
    {
        Path out{path.front()};
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            expand(path[i], path[i + 1], out);
        return out;
    }
};

// Some path between two vertices, by BFS over forward edges.
Path any_path(const Instance& inst, int from, int to)
{
    const auto adj = adjacency(inst);
    std::vector<int> pred(inst.n, -2);
    pred[from] = -1;
    for (int v = from; v < to; ++v) {
        if (pred[v] == -2)
            continue;
        for (int w : adj.out[v])
            if (w <= to && pred[w] == -2)
                pred[w] = v;
    }
    Path path;
    for (int v = to; v != -1; v = pred[v])
        path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

int last_left(const Instance& instance)
{
    int b = -1;
    for (const auto& p : instance.pairs)
        b = std::max(b, p.left);
    return b;
}

}  // namespace

SolveResult solve_halving(const Instance& instance)
{
    if (has_shared_endpoints(instance))
        throw Error(ErrorCode::SharedEndpoint, "halving solver needs endpoint-distinct pairs");
    if (const auto c = classify_instance(instance);
        !(c.kind == StructureClass::Halving ||
          (c.kind == StructureClass::Disjoint && instance.pairs.size() <= 1)))
        throw Error(ErrorCode::WrongClass, "halving solver does not apply: instance is " +
                                               std::string(to_string(c.kind)));

    Stopwatch sw;
    SolveResult r;
    r.stats.solver = "halving";
    r.stats.route = "halving";
    auto finish = [&]() -> SolveResult {
        r.stats.elapsed_ms = sw.elapsed_ms();
        return r;
    };

    auto pruned = reachability_prune(instance);
    if (pruned.target_unreachable)
        return finish();
    Instance cur = pruned.instance;
    std::vector<int> to_input = pruned.new_to_old;

    // After pruning, source is the first and target the last vertex. A pair
    // containing either of them bans the partner outright.
    std::vector<char> banned(cur.n, 0);
    bool any_banned = false;
    for (const auto& p : cur.pairs) {
        if (p.left == cur.source && p.right == cur.target)
            return finish();
        if (p.left == cur.source || p.right == cur.target) {
            banned[p.left == cur.source ? p.right : p.left] = 1;
            any_banned = true;
        }
    }
    if (any_banned) {
        std::vector<Edge> edges;
        for (const auto& e : cur.edges)
            if (!banned[e.from] && !banned[e.to])
                edges.push_back(e);
        std::vector<ForbiddenPair> pairs;
        for (const auto& p : cur.pairs)
            if (!banned[p.left] && !banned[p.right] && p.left != cur.source && p.right != cur.target)
                pairs.push_back(p);
        auto again = reachability_prune(
            make_instance(cur.n, std::move(edges), std::move(pairs), cur.source, cur.target));
        if (again.target_unreachable)
            return finish();
        for (auto& v : again.new_to_old)
            v = to_input[v];
        to_input = again.new_to_old;
        cur = again.instance;
    }

    const int s = cur.source, t = cur.target;
    if (cur.pairs.empty()) {
        r.found = true;
        r.path = map_path(any_path(cur, s, t), to_input);
        return finish();
    }

    // Bypass pair-free vertices of the first part so that every crossing edge
    // leaves the source or some left member.
    const int boundary = last_left(cur);
    std::vector<char> in_pair(cur.n, 0);
    for (const auto& p : cur.pairs)
        in_pair[p.left] = in_pair[p.right] = 1;
    WorkGraph work(cur);
    for (int a = s + 1; a <= boundary; ++a)
        if (!in_pair[a])
            work.contract(a);
    const Instance reduced = make_instance(cur.n, work.edges(), cur.pairs, s, t);
    auto to_output = [&](const Path& p) { return map_path(work.expand(p), to_input); };

    // An edge from the source into the second part, or from the first part
    // into the target, gives a safe path without further work.
    for (const auto& e : reduced.edges) {
        if (e.from == s && e.to > boundary) {
            Path p{s};
            const auto rest = any_path(reduced, e.to, t);
            p.insert(p.end(), rest.begin(), rest.end());
            r.found = true;
            r.path = to_output(p);
            r.stats.route = "halving-trivial";
            return finish();
        }
        if (e.to == t && e.from <= boundary) {
            Path p = any_path(reduced, s, e.from);
            p.push_back(t);
            r.found = true;
            r.path = to_output(p);
            r.stats.route = "halving-trivial";
            return finish();
        }
    }

    const int count = static_cast<int>(reduced.pairs.size());
    for (int k = 1; k <= count; ++k) {
        const auto nested = reduce_halving_to_nested(reduced, k);
        ++r.stats.nested_instances;
        const auto sub = solve_well_parenthesized(nested);
        r.stats.cells += sub.stats.cells;
        if (!sub.found || r.found)
            continue;
        // s .. x_k, t, .. , y, t'  ->  s .. x_k, y, .. , t
        Path prefix, suffix;
        for (int v : *sub.path) {
            const int orig = nested_to_halving_vertex(reduced, v);
            if (orig < 0)
                continue;
            (orig <= boundary ? prefix : suffix).push_back(orig);
        }
        prefix.insert(prefix.end(), suffix.rbegin(), suffix.rend());
        r.found = true;
        r.path = to_output(prefix);
    }
    return finish();
}

}  // namespace pafp
