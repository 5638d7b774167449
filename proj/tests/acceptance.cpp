// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails.
//
//   pafp_acceptance [N ...]    run only the listed criteria

#include "pafp/bench.hpp"
#include "pafp/dp_solvers.hpp"
#include "pafp/matrix_solver.hpp"
#include "pafp/reductions.hpp"
#include "support/oracle.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

using namespace pafp;
namespace t = pafp::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

// Criterion 10 is fed by every other suite.
struct WitnessLedger {
    long checked = 0;
    long bad = 0;
    long decoded = 0;
    long bad_decode = 0;
    std::string first_problem;

    void path(const Instance& inst, const std::optional<Path>& p, const char* where)
    {
        if (!p)
            return;
        ++checked;
        bool ok = false;
        try {
            ok = verify_safe(inst, *p);
        } catch (const Error&) {
        }
        if (!ok && bad++ == 0)
            first_problem = std::string("unsafe witness from ") + where;
    }

    void decode(const Formula3Sat& f, const Gadget& g, const Path& p, const char* where)
    {
        ++decoded;
        if (!evaluate(f, decode_assignment(g, p, f.num_vars)) && bad_decode++ == 0 &&
            first_problem.empty())
            first_problem = std::string("bad assignment decoded from ") + where;
    }
};

WitnessLedger witnesses;

std::string fmt(const char* format, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

OracleOptions wide_oracle()
{
    OracleOptions o;
    o.max_pairs = 4096;
    o.max_states = 50'000'000;
    return o;
}

// ---------------------------------------------------------------------------

Outcome oracle_sweep()
{
    const auto start = Clock::now();
    std::mt19937_64 rng(1001);
    const std::pair<StructureClass, const char*> classes[] = {
        {StructureClass::Disjoint, "disjoint"},
        {StructureClass::Nested, "nested"},
        {StructureClass::WellParenthesized, "well-parenthesized"},
        {StructureClass::Halving, "halving"},
    };
    constexpr int kPerClass = 1000;
    std::ostringstream detail;
    long total = 0, agree = 0;
    for (const auto& [cls, name] : classes) {
        int ok = 0;
        for (int i = 0; i < kPerClass; ++i) {
            const auto inst = t::random_class_instance(rng, cls, 2, 30, 8);
            SolveResult r;
            switch (cls) {
            case StructureClass::Disjoint: r = solve_disjoint(inst); break;
            case StructureClass::Halving: r = solve_halving(inst); break;
            default: r = solve_well_parenthesized(inst); break;
            }
            witnesses.path(inst, r.path, name);
            ok += r.found == brute_force_solve(inst).found;
        }
        detail << " " << name << " " << ok << "/" << kPerClass;
        total += kPerClass;
        agree += ok;
    }
    const double secs = seconds_since(start);
    detail << fmt(" (%.1f s, target < 120 s)", secs);
    return {agree == total && secs < 120.0, "oracle equivalence:" + detail.str()};
}

Outcome matrix_tables()
{
    std::mt19937_64 rng(1002);
    constexpr int kCount = 200;
    long differing = 0;
    int largest = 0;
    for (int i = 0; i < kCount; ++i) {
        // a quarter of the instances at the top of the range
        const int lo = i % 4 == 0 ? 400 : 2;
        auto inst = t::random_class_instance(rng, i % 5 == 0 ? StructureClass::Nested
                                                              : StructureClass::WellParenthesized,
                                             lo, 512, 128);
        largest = std::max(largest, inst.n);
        const auto cubic = build_dp_tables(inst);
        const auto matrix = matrix_build(inst);
        for (int u = 0; u < inst.n; ++u)
            for (int v = 0; v < inst.n; ++v)
                differing += (cubic.P(u, v) != matrix.P(u, v)) + (cubic.J(u, v) != matrix.J(u, v));
        const auto m = solve_matrix(inst);
        witnesses.path(inst, m.path, "matrix");
    }
    return {differing == 0,
            fmt("matrix/cubic tables: %d instances up to n=%d, %ld differing cells", kCount,
                largest, differing)};
}

Outcome rules_agreement()
{
    std::mt19937_64 rng(1003);
    constexpr int kCount = 500;
    int agree = 0;
    for (int i = 0; i < kCount; ++i) {
        const auto inst = t::random_class_instance(rng, StructureClass::WellParenthesized, 6, 60, 15);
        const auto wp = solve_well_parenthesized(inst);
        witnesses.path(inst, wp.path, "cubic");
        try {
            agree += solve_by_rules(inst).found == wp.found;
        } catch (const Error&) {
        }
    }
    return {agree == kCount, fmt("rules vs cubic: %d/%d agree", agree, kCount)};
}

// Pair count the halving driver must reduce: pairs left after pruning and
// after deleting every partner of the source or target.
int expected_nested_instances(const Instance& inst)
{
    const auto pr = reachability_prune(inst);
    if (pr.target_unreachable)
        return 0;
    const auto& cur = pr.instance;
    std::set<int> banned;
    for (const auto& p : cur.pairs) {
        if (p.left == cur.source && p.right == cur.target)
            return 0;
        if (p.left == cur.source)
            banned.insert(p.right);
        if (p.right == cur.target)
            banned.insert(p.left);
    }
    if (banned.empty())
        return static_cast<int>(cur.pairs.size());
    std::vector<Edge> edges;
    for (const auto& e : cur.edges)
        if (!banned.count(e.from) && !banned.count(e.to))
            edges.push_back(e);
    std::vector<ForbiddenPair> pairs;
    for (const auto& p : cur.pairs)
        if (!banned.count(p.left) && !banned.count(p.right) && p.left != cur.source &&
            p.right != cur.target)
            pairs.push_back(p);
    const auto again = reachability_prune(make_instance(cur.n, edges, pairs, cur.source, cur.target));
    return again.target_unreachable ? 0 : static_cast<int>(again.instance.pairs.size());
}

Outcome halving_soundness()
{
    std::mt19937_64 rng(1004);
    constexpr int kCount = 500;
    int agree = 0, count_ok = 0, reduced = 0, input_k = 0;
    for (int i = 0; i < kCount; ++i) {
        // alternate between the generic generator and the structured one
        const auto inst = i % 2 ? t::random_halving_instance(rng, 24, 8)
                                : t::random_class_instance(rng, StructureClass::Halving, 4, 24, 8);
        if (classify_instance(inst).kind != StructureClass::Halving)
            throw std::logic_error("generator produced a non-halving instance");
        const auto r = solve_halving(inst);
        witnesses.path(inst, r.path, "halving");
        agree += r.found == brute_force_solve(inst).found;
        const int expect = r.stats.route == "halving" ? expected_nested_instances(inst) : 0;
        count_ok += r.stats.nested_instances == expect;
        if (r.stats.nested_instances > 0) {
            ++reduced;
            input_k += r.stats.nested_instances == static_cast<int>(inst.pairs.size());
        }
    }
    return {agree == kCount && count_ok == kCount && reduced > 0,
            fmt("halving vs oracle: %d/%d agree; nested instances = K on %d/%d "
                "(%d reduced, %d of them with no pair removed by preprocessing)",
                agree, kCount, count_ok, kCount, reduced, input_k)};
}

struct GadgetStats {
    long formulas = 0;
    long exhaustive = 0;
    long agree_overlapping = 0;
    long agree_ordered = 0;
    long ordered_nested = 0;
    long overlapping_checked = 0;
    long overlapping_disjoint = 0;
};

GadgetStats gadget_stats;
bool gadgets_done = false;

void run_gadgets()
{
    if (gadgets_done)
        return;
    gadgets_done = true;
    auto& s = gadget_stats;
    const auto oracle = wide_oracle();
    auto check = [&](const Formula3Sat& f) {
        const bool sat = t::truth_table_sat(f).has_value();
        ++s.formulas;

        const auto over = sat3_to_overlapping(f);
        const auto ro = brute_force_solve(over.instance, oracle);
        s.agree_overlapping += ro.found == sat;
        witnesses.path(over.instance, ro.path, "overlapping gadget");
        if (ro.path)
            witnesses.decode(f, over, *ro.path, "overlapping gadget");
        if (over.instance.pairs.size() >= 2) {
            ++s.overlapping_checked;
            s.overlapping_disjoint +=
                classify_instance(split_shared_vertices(over.instance).instance).has_disjoint;
        }

        const auto ord = sat3_to_ordered(f);
        const auto rd = brute_force_solve(ord.instance, oracle);
        s.agree_ordered += rd.found == sat;
        witnesses.path(ord.instance, rd.path, "ordered gadget");
        if (rd.path)
            witnesses.decode(f, ord, *rd.path, "ordered gadget");
        s.ordered_nested += classify_instance(ord.instance).has_nested;
    };
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 2; ++n)
            for (const auto& f : t::all_formulas(m, n)) {
                check(f);
                ++s.exhaustive;
            }
    std::mt19937_64 rng(1005);
    for (int i = 0; i < 200; ++i)
        check(t::random_formula(rng, 4, 4));
}

Outcome gadget_correctness()
{
    run_gadgets();
    const auto& s = gadget_stats;
    return {s.agree_overlapping == s.formulas && s.agree_ordered == s.formulas,
            fmt("gadgets: %ld formulas (%ld exhaustive m<=2 n<=2, 200 random m<=4 n<=4); "
                "overlapping %ld/%ld, ordered %ld/%ld match truth tables",
                s.formulas, s.exhaustive, s.agree_overlapping, s.formulas, s.agree_ordered,
                s.formulas)};
}

Outcome gadget_structure()
{
    run_gadgets();
    const auto& s = gadget_stats;
    return {s.ordered_nested == 0 && s.overlapping_disjoint == 0,
            fmt("gadget structure: ordered outputs with a nested couple %ld/%ld; overlapping "
                "outputs (>=2 pairs) with a disjoint couple %ld/%ld",
                s.ordered_nested, s.formulas, s.overlapping_disjoint, s.overlapping_checked)};
}

Outcome min_violations()
{
    std::mt19937_64 rng(1007);
    constexpr int kCount = 500;
    int count_ok = 0, zero_ok = 0;
    for (int i = 0; i < kCount; ++i) {
        const auto inst = t::random_class_instance(rng, StructureClass::WellParenthesized, 6, 18, 8);
        const auto r = solve_min_violations(inst);
        bool ok = r.count == t::exhaustive_min_violations(inst);
        if (r.path) {
            try {
                check_path_structure(inst, *r.path);
                ok &= t::violations(inst, *r.path) == *r.count;
            } catch (const Error&) {
                ok = false;
            }
        }
        count_ok += ok;
        const auto wp = solve_well_parenthesized(inst);
        zero_ok += (r.count == 0) == wp.found;
        if (r.count == 0)
            witnesses.path(inst, r.path, "min-violations");
    }
    return {count_ok == kCount && zero_ok == kCount,
            fmt("min-violations: count matches enumeration %d/%d, zero iff safe %d/%d", count_ok,
                kCount, zero_ok, kCount)};
}

Outcome split_equivalence()
{
    std::mt19937_64 rng(1008);
    constexpr int kCount = 500;
    int agree = 0, within = 0, shared = 0, minimal = 0;
    int worst_excess = 0;
    std::string worst;
    for (int i = 0; i < kCount; ++i) {
        const int n = std::uniform_int_distribution<int>(2, 15)(rng);
        const auto inst = t::random_shared_instance(rng, n, 10, 3, 0.25);
        const auto s = split_shared_vertices(inst);
        shared += has_shared_endpoints(inst);
        const auto before = brute_force_solve(inst);
        const auto after = brute_force_solve(s.instance);
        witnesses.path(inst, before.path, "oracle");
        witnesses.path(s.instance, after.path, "oracle on split instance");
        agree += before.found == after.found;
        const int growth = s.instance.n - inst.n;
        const int bound = static_cast<int>(inst.pairs.size());
        within += growth <= bound;
        // Each vertex with r pair ends needs r-1 extra vertices, and no split
        // can do with fewer.
        std::set<int> touched;
        for (const auto& p : inst.pairs) {
            touched.insert(p.left);
            touched.insert(p.right);
        }
        minimal += growth == 2 * bound - static_cast<int>(touched.size());
        if (growth - bound > worst_excess) {
            worst_excess = growth - bound;
            worst = fmt(" (worst: growth %d for |F|=%d on n=%d)", growth, bound, inst.n);
        }
    }
    return {agree == kCount && within == kCount,
            fmt("split: oracle invariant %d/%d (%d with shared ends); growth <= |F| %d/%d%s; "
                "growth = 2|F| - touched vertices (the minimum) %d/%d",
                agree, kCount, shared, within, kCount, worst.c_str(), minimal, kCount)};
}

Outcome performance()
{
    std::ostringstream d;
    bool pass = true;

    // (a) dense instance
    {
        GenOptions g;
        g.cls = StructureClass::WellParenthesized;
        g.n = 2000;
        g.pairs = 250;
        g.edge_density = 0.5;
        g.seed = 9;
        const auto inst = gen_random(g);
        const auto start = Clock::now();
        const auto r = solve_well_parenthesized(inst);
        const double secs = seconds_since(start);
        witnesses.path(inst, r.path, "cubic dense");
        const bool ok = secs <= 300.0;
        pass &= ok;
        d << fmt("dense n=2000 m=%zu cubic %.2f s [%s]", inst.edges.size(), secs,
                 ok ? "ok" : "over 300 s");
    }

    // (b) cubic slope, (c) matrix speed-up, on the bench workload
    BenchOptions o;
    o.solvers = {"cubic", "matrix"};
    o.sizes = {256, 512, 1024, 2048};
    o.repeats = 5;
    o.time_cap_seconds = time_cap_from_env(300.0);
    const auto report = run_bench(o);
    if (const auto slope = report.slope.at("cubic")) {
        const bool ok = *slope >= 2.5 && *slope <= 3.3;
        pass &= ok;
        d << fmt("; cubic slope %.2f [%s]", *slope, ok ? "ok" : "outside 2.5..3.3");
    } else {
        pass = false;
        d << "; cubic slope missing";
    }
    std::map<std::string, double> at2048;
    for (const auto& c : report.cells)
        if (c.n == 2048 && !c.skipped)
            at2048[c.solver] = c.median_ms;
    if (at2048.count("cubic") && at2048.count("matrix") && at2048["matrix"] > 0) {
        const double speedup = at2048["cubic"] / at2048["matrix"];
        const bool ok = speedup >= 4.0;
        pass &= ok;
        d << fmt("; n=2048 cubic %.1f ms, matrix %.1f ms, speed-up %.2fx [%s]", at2048["cubic"],
                 at2048["matrix"], speedup, ok ? "ok" : "below 4x");
    } else {
        pass = false;
        d << "; n=2048 cells missing";
    }
    return {pass, "performance: " + d.str()};
}

Outcome witness_soundness()
{
    const auto& w = witnesses;
    return {w.checked > 0 && w.bad == 0 && w.decoded > 0 && w.bad_decode == 0,
            fmt("witnesses: %ld/%ld paths safe, %ld/%ld gadget assignments satisfy the formula",
                w.checked - w.bad, w.checked, w.decoded - w.bad_decode, w.decoded) +
                (w.first_problem.empty() ? "" : "; first problem: " + w.first_problem)};
}

}  // namespace

int main(int argc, char** argv)
{
    const std::vector<std::function<Outcome()>> criteria = {
        oracle_sweep,   matrix_tables,  rules_agreement,   halving_soundness, gadget_correctness,
        gadget_structure, min_violations, split_equivalence, performance,       witness_soundness,
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i)
        only.insert(std::atoi(argv[i]));

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!only.empty() && !only.count(id))
            continue;
        Outcome out;
        const auto start = Clock::now();
        try {
            out = criteria[i]();
        } catch (const std::exception& e) {
            out = {false, std::string("aborted: ") + e.what()};
        }
        failed += !out.pass;
        std::printf("criterion %2d: %s  %s  [%.1f s]\n", id, out.pass ? "PASS" : "FAIL",
                    out.detail.c_str(), seconds_since(start));
        std::fflush(stdout);
    }
    std::printf("%d criteria failed\n", failed);
    return failed ? 1 : 0;
}
