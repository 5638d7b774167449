// Independent reference implementations for tests. Nothing here shares code
// with the solvers beyond the data model.
#ifndef PAFP_TESTS_ORACLE_HPP
#define PAFP_TESTS_ORACLE_HPP

#include "pafp/classify.hpp"
#include "pafp/core.hpp"
#include "pafp/reductions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace pafp::testing {

// Calls fn(path) for every source-target path; stops when fn returns true.
inline bool for_each_path(const Instance& inst, const std::function<bool(const Path&)>& fn)
{
    std::vector<std::vector<int>> out(inst.n);
    for (const auto& e : inst.edges)
        out[e.from].push_back(e.to);
    Path path{inst.source};
    std::function<bool(int)> go = [&](int v) -> bool {
        if (v == inst.target)
            return fn(path);
        for (int w : out[v]) {
            if (w > inst.target)
                continue;
            path.push_back(w);
            if (go(w))
                return true;
            path.pop_back();
        }
        return false;
    };
    return go(inst.source);
}

inline int violations(const Instance& inst, const Path& path)
{
    std::set<int> on(path.begin(), path.end());
    int c = 0;
    for (const auto& p : inst.pairs)
        c += on.count(p.left) && on.count(p.right);
    return c;
}

inline std::optional<Path> exhaustive_safe_path(const Instance& inst)
{
    std::optional<Path> found;
    for_each_path(inst, [&](const Path& p) {
        if (violations(inst, p) == 0) {
            found = p;
            return true;
        }
        return false;
    });
    return found;
}

inline std::optional<int> exhaustive_min_violations(const Instance& inst)
{
    std::optional<int> best;
    for_each_path(inst, [&](const Path& p) {
        const int c = violations(inst, p);
        if (!best || c < *best)
            best = c;
        return false;
    });
    return best;
}

inline std::optional<std::vector<bool>> truth_table_sat(const Formula3Sat& f)
{
    for (unsigned mask = 0; mask < (1u << f.num_vars); ++mask) {
        std::vector<bool> a(f.num_vars);
        for (int k = 0; k < f.num_vars; ++k)
            a[k] = (mask >> k) & 1;
        bool all = true;
        for (const auto& clause : f.clauses) {
            bool any = false;
            for (const auto& lit : clause)
                any |= a[lit.var - 1] != lit.negated;
            if (!any) {
                all = false;
                break;
            }
        }
        if (all)
            return a;
    }
    return std::nullopt;
}

// Every strict 3-CNF over `vars` variables with exactly `clauses` clauses
// (ordered clause lists, literal order inside a clause significant).
inline std::vector<Formula3Sat> all_formulas(int vars, int clauses)
{
    std::vector<Literal> lits;
    for (int k = 1; k <= vars; ++k) {
        lits.push_back({k, false});
        lits.push_back({k, true});
    }
    std::vector<Clause> all_clauses;
    for (auto a : lits)
        for (auto b : lits)
            for (auto c : lits)
                all_clauses.push_back({a, b, c});
    std::vector<Formula3Sat> out{{vars, {}}};
    for (int i = 0; i < clauses; ++i) {
        std::vector<Formula3Sat> next;
        for (const auto& f : out)
            for (const auto& c : all_clauses) {
                auto g = f;
                g.clauses.push_back(c);
                next.push_back(std::move(g));
            }
        out = std::move(next);
    }
    return out;
}

inline Formula3Sat random_formula(std::mt19937_64& rng, int max_vars, int max_clauses)
{
    Formula3Sat f;
    f.num_vars = std::uniform_int_distribution<int>(1, max_vars)(rng);
    const int clauses = std::uniform_int_distribution<int>(1, max_clauses)(rng);
    std::uniform_int_distribution<int> var(1, f.num_vars);
    std::bernoulli_distribution neg(0.5);
    for (int i = 0; i < clauses; ++i) {
        Clause c;
        for (auto& lit : c)
            lit = {var(rng), neg(rng)};
        f.clauses.push_back(c);
    }
    return f;
}

// Arbitrary pairs, at most `per_vertex` pair ends on any vertex.
inline Instance random_shared_instance(std::mt19937_64& rng, int n, int max_pairs, int per_vertex,
                                       double density)
{
    std::bernoulli_distribution pick(density);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (v == u + 1 ? pick(rng) || pick(rng) : pick(rng))
                edges.push_back({u, v});
    std::vector<int> load(n, 0);
    std::vector<ForbiddenPair> pairs;
    std::uniform_int_distribution<int> vertex(0, n - 1);
    const int want = std::uniform_int_distribution<int>(0, max_pairs)(rng);
    for (int tries = 0; tries < 20 * want && static_cast<int>(pairs.size()) < want; ++tries) {
        int a = vertex(rng), b = vertex(rng);
        if (a == b || load[a] >= per_vertex || load[b] >= per_vertex)
            continue;
        ForbiddenPair p{std::min(a, b), std::max(a, b)};
        if (std::find(pairs.begin(), pairs.end(), p) != pairs.end())
            continue;
        ++load[a];
        ++load[b];
        pairs.push_back(p);
    }
    return make_instance(n, std::move(edges), std::move(pairs), 0, n - 1);
}

// gen_random with size and density drawn at random; retries on Infeasible.
inline Instance random_class_instance(std::mt19937_64& rng, StructureClass cls, int min_n,
                                      int max_n, int max_pairs)
{
    for (;;) {
        GenOptions g;
        g.cls = cls;
        g.n = std::uniform_int_distribution<int>(min_n, max_n)(rng);
        const int lo = std::max(min_pairs_for_class(cls), 1);
        const int hi = std::min(max_pairs, g.n / 2);
        if (hi < lo)
            continue;
        g.pairs = std::uniform_int_distribution<int>(lo, hi)(rng);
        g.edge_density = std::uniform_real_distribution<double>(0.08, 0.5)(rng);
        g.backbone = std::bernoulli_distribution(0.5)(rng);
        g.seed = rng();
        try {
            return gen_random(g);
        } catch (const Error&) {
        }
    }
}

// Halving instance with the source before every left member and the target
// after every right member. Crossing edges mostly leave left members, so the
// halving driver usually has to build its nested family.
inline Instance random_halving_instance(std::mt19937_64& rng, int max_n, int max_pairs)
{
    std::uniform_int_distribution<int> pick_k(2, max_pairs);
    int k = 0, f1 = 0, f2 = 0;
    do {
        k = pick_k(rng);
        f1 = std::uniform_int_distribution<int>(0, 3)(rng);
        f2 = std::uniform_int_distribution<int>(0, 6)(rng);
    } while (2 + 2 * k + f1 + f2 > max_n);
    const int n = 2 + 2 * k + f1 + f2;
    const int b = k + f1;  // last vertex of the first part

    auto choose = [&](int lo, int count, int take) {
        std::vector<int> v(count);
        std::iota(v.begin(), v.end(), lo);
        std::shuffle(v.begin(), v.end(), rng);
        v.resize(take);
        std::sort(v.begin(), v.end());
        return v;
    };
    // the last first-part vertex is x_k, so the driver sees the same boundary
    auto lefts = choose(1, b - 1, k - 1);
    lefts.push_back(b);
    const auto rights = choose(b + 1, k + f2, k);
    std::vector<ForbiddenPair> pairs;
    for (int i = 0; i < k; ++i)
        pairs.push_back({lefts[i], rights[i]});

    // Each part keeps a chain so pruning rarely removes a pair member.
    const double d = std::uniform_real_distribution<double>(0.0, 0.3)(rng);
    std::bernoulli_distribution inside(d), crossing(d / 6), rare(0.01);
    std::vector<bool> is_left(n, false);
    for (int x : lefts)
        is_left[x] = true;
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool take;
            if (u <= b && v > b)
                take = is_left[u] && v != n - 1 ? crossing(rng) : rare(rng);
            else
                take = v == u + 1 || inside(rng);
            if (take)
                edges.push_back({u, v});
        }
    // every left member crosses somewhere, and the second part is entered at its start
    std::uniform_int_distribution<int> second_vertex(b + 1, n - 2), left(0, k - 1);
    for (int x : lefts)
        edges.push_back({x, second_vertex(rng)});
    edges.push_back({lefts[left(rng)], b + 1});
    return make_instance(n, std::move(edges), std::move(pairs), 0, n - 1);
}

}  // namespace pafp::testing

#endif
