#include "pafp/dp_solvers.hpp"

#include "stopwatch.hpp"

#include <algorithm>

namespace pafp {

namespace {

// Dense working graph for the reduction rules. Vertices keep their indices;
// contracted vertices are marked dead.
class RuleGraph {
public:
    explicit RuleGraph(const Instance& inst)
        : n_(inst.n), s_(inst.source), t_(inst.target), alive_(inst.n, 1),
          edge_(static_cast<std::size_t>(inst.n) * inst.n, 0),
          forbidden_(static_cast<std::size_t>(inst.n) * inst.n, 0), pair_count_(inst.n, 0),
          pairs_(inst.pairs)
    {
        for (const auto& e : inst.edges)
            at(edge_, e.from, e.to) = 1;
        for (const auto& p : pairs_) {
            at(forbidden_, p.left, p.right) = 1;
            ++pair_count_[p.left];
            ++pair_count_[p.right];
        }
        live_vertices_ = n_;
    }

    int live_vertices() const { return live_vertices_; }
    bool has_edge(int u, int v) const { return at(edge_, u, v); }

    // rule 2: drop every edge whose endpoints form a forbidden pair
    bool remove_forbidden_edges()
    {
        bool changed = false;
        for (const auto& p : pairs_) {
            if (at(edge_, p.left, p.right)) {
                at(edge_, p.left, p.right) = 0;
                changed = true;
            }
        }
        return changed;
    }

    // rule 3: drop pairs whose members are not connected
    bool remove_unconnected_pairs()
    {
        bool changed = false;
        for (std::size_t i = 0; i < pairs_.size();) {
            const auto p = pairs_[i];
            if (!reaches(p.left, p.right)) {
                at(forbidden_, p.left, p.right) = 0;
                --pair_count_[p.left];
                --pair_count_[p.right];
                pairs_[i] = pairs_.back();
                pairs_.pop_back();
                changed = true;
            } else {
                ++i;
            }
        }
        return changed;
    }

    int lowest_contractible() const
    {
        for (int v = 0; v < n_; ++v)
            if (alive_[v] && v != s_ && v != t_ && pair_count_[v] == 0)
                return v;
        return -1;
    }

    // rule 1, with rule 2 applied to the edges it would create; returns true
    // when some created edge was suppressed
    bool contract(int v)
    {
        bool suppressed = false;
        for (int u = 0; u < v; ++u) {
            if (!alive_[u] || !at(edge_, u, v))
                continue;
            for (int w = v + 1; w < n_; ++w) {
                if (!alive_[w] || !at(edge_, v, w))
                    continue;
                if (at(forbidden_, u, w))
                    suppressed = true;
                else
                    at(edge_, u, w) = 1;
            }
        }
        for (int u = 0; u < n_; ++u) {
            at(edge_, u, v) = 0;
            at(edge_, v, u) = 0;
        }
        alive_[v] = 0;
        --live_vertices_;
        return suppressed;
    }

private:
    std::uint8_t& at(std::vector<std::uint8_t>& m, int r, int c)
    {
        return m[static_cast<std::size_t>(r) * n_ + c];
    }
    std::uint8_t at(const std::vector<std::uint8_t>& m, int r, int c) const
    {
        return m[static_cast<std::size_t>(r) * n_ + c];
    }

    bool reaches(int a, int b) const
    {
        std::vector<char> seen(n_, 0);
        seen[a] = 1;
        for (int v = a; v < b; ++v) {
            if (!seen[v] || !alive_[v])
                continue;
            for (int w = v + 1; w <= b; ++w)
                if (alive_[w] && at(edge_, v, w))
                    seen[w] = 1;
        }
        return seen[b];
    }

    int n_, s_, t_;
    int live_vertices_ = 0;
    std::vector<char> alive_;
    std::vector<std::uint8_t> edge_;
    std::vector<std::uint8_t> forbidden_;
    std::vector<int> pair_count_;
    std::vector<ForbiddenPair> pairs_;
};

}  // namespace

SolveResult solve_by_rules(const Instance& instance)
{
    Stopwatch sw;
    SolveResult r;
    r.stats.solver = "rules";
    r.stats.route = "rules";

    const auto pruned = reachability_prune(instance);
    if (pruned.target_unreachable) {
        r.stats.elapsed_ms = sw.elapsed_ms();
        return r;
    }
    const Instance& inst = pruned.instance;
    RuleGraph g(inst);
    g.remove_forbidden_edges();
    g.remove_unconnected_pairs();

    // every round either contracts a vertex or removes a pair
    const int cap = inst.n + static_cast<int>(inst.pairs.size()) + 2;
    int rounds = 0;
    while (g.live_vertices() > 2) {
        if (++rounds > cap)
            throw Error(ErrorCode::NonTermination,
                        "reduction rules exceeded " + std::to_string(cap) +
                            " rounds; pairs are likely not well-parenthesized");
        const int v = g.lowest_contractible();
        if (v >= 0) {
            if (g.contract(v))
                g.remove_unconnected_pairs();
            continue;
        }
        if (!g.remove_unconnected_pairs())
            throw Error(ErrorCode::NonTermination,
                        "no reduction rule applies with " + std::to_string(g.live_vertices()) +
                            " vertices left; pairs are likely not well-parenthesized");
    }
    r.found = g.has_edge(inst.source, inst.target);
    r.stats.cells = static_cast<std::uint64_t>(rounds);
    r.stats.elapsed_ms = sw.elapsed_ms();
    return r;
}

}  // namespace pafp
