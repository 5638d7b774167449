// pafp: command-line front end for the solver suite.
//
// Exit codes: 0 found / safe, 1 not found / unsafe, 2 error.

#include "pafp/bench.hpp"
#include "pafp/classify.hpp"
#include "pafp/dp_solvers.hpp"
#include "pafp/matrix_solver.hpp"
#include "pafp/reductions.hpp"
#include "pafp/text_format.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

using json = nlohmann::json;

namespace {

constexpr int kFound = 0;
constexpr int kNotFound = 1;
constexpr int kError = 2;

std::string path_text(const pafp::Path& path)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < path.size(); ++i)
        os << (i ? " " : "") << path[i];
    return os.str();
}

void write_output(const std::string& file, const std::string& text)
{
    if (file.empty() || file == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(file, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + file);
    out << text;
}

pafp::Instance load_instance(const std::string& file)
{
    return pafp::parse_instance(pafp::read_file(file));
}

// ---------------------------------------------------------------------------
// solve

struct SolveArgs {
    std::string file;
    std::string solver = "auto";
    bool min_violations = false;
    bool json = false;
    int base_span = 64;
};

pafp::SolveResult run_solver(const std::string& name, const pafp::Instance& instance, int base_span)
{
    using namespace pafp;
    // The state budget is the real limit here, not the pair count.
    OracleOptions oracle;
    oracle.max_pairs = std::numeric_limits<std::size_t>::max();
    if (name == "cubic")
        return solve_well_parenthesized(instance);
    if (name == "matrix")
        return solve_matrix(instance, base_span);
    if (name == "rules")
        return solve_by_rules(instance);
    if (name == "disjoint")
        return solve_disjoint(instance);
    if (name == "halving")
        return solve_halving(instance);
    if (name == "oracle")
        return brute_force_solve(instance, oracle);
    AutoOptions options;
    options.base_span = base_span;
    options.oracle = oracle;
    return solve_auto(instance, options);
}

int cmd_solve(const SolveArgs& a)
{
    using namespace pafp;
    const auto instance = load_instance(a.file);
    // Shared pair ends are split for every solver; witnesses are mapped back.
    const auto split = split_shared_vertices(instance);
    const auto cls = classify_instance(split.instance);

    json report{{"command", "solve"},
                {"instance", a.file},
                {"class", std::string(to_string(cls.kind))},
                {"split", split.instance.n != instance.n}};

    if (a.min_violations) {
        const auto r = solve_min_violations(split.instance);
        std::optional<Path> path;
        if (r.path)
            path = map_path(*r.path, split.origin);
        report["solver"] = "min-violations";
        report["route"] = "min-violations";
        report["found"] = r.count && *r.count == 0;
        report["violations"] = r.count ? json(*r.count) : json(nullptr);
        report["path"] = path ? json(*path) : json(nullptr);
        if (a.json) {
            std::cout << report.dump(2) << "\n";
        } else {
            std::cout << "violations: " << (r.count ? std::to_string(*r.count) : "unreachable") << "\n";
            if (path)
                std::cout << "path: " << path_text(*path) << "\n";
        }
        return r.count && *r.count == 0 ? kFound : kNotFound;
    }

    const auto result = a.solver == "auto" ? run_solver("auto", instance, a.base_span)
                                           : run_solver(a.solver, split.instance, a.base_span);
    std::optional<Path> path = result.path;
    if (path && a.solver != "auto")
        path = map_path(*path, split.origin);
    report["solver"] = a.solver;
    report["route"] = result.stats.route;
    report["found"] = result.found;
    report["path"] = path ? json(*path) : json(nullptr);
    report["elapsed_ms"] = result.stats.elapsed_ms;
    report["cells"] = result.stats.cells;
    if (result.stats.nested_instances > 0)
        report["nested_instances"] = result.stats.nested_instances;

    if (a.json) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << (result.found ? "found" : "not found") << "\n";
        if (path)
            std::cout << "path: " << path_text(*path) << "\n";
        std::cout << "route: " << result.stats.route << "\n"
                  << "time_ms: " << result.stats.elapsed_ms << "\n";
    }
    return result.found ? kFound : kNotFound;
}

// ---------------------------------------------------------------------------
// classify

int cmd_classify(const std::string& file, bool as_json)
{
    using namespace pafp;
    const auto instance = load_instance(file);
    const auto split = split_shared_vertices(instance);
    const auto c = classify_instance(split.instance);
    if (as_json) {
        json report{{"command", "classify"},
                    {"instance", file},
                    {"class", std::string(to_string(c.kind))},
                    {"has_disjoint", c.has_disjoint},
                    {"has_nested", c.has_nested},
                    {"has_halving", c.has_halving},
                    {"pairs", instance.pairs.size()},
                    {"split", split.instance.n != instance.n}};
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << to_string(c.kind) << "\n";
    }
    return kFound;
}

// ---------------------------------------------------------------------------
// reduce

std::string with_tags(const pafp::Gadget& g)
{
    std::ostringstream os;
    os << pafp::serialize_instance(g.instance);
    for (std::size_t v = 0; v < g.tags.size(); ++v)
        os << "# tag " << v << " " << to_string(g.tags[v]) << "\n";
    return os.str();
}

int cmd_reduce(const std::string& to, const std::string& file, int k, const std::string& out)
{
    using namespace pafp;
    if (to == "nested") {
        const auto instance = load_instance(file);
        write_output(out, serialize_instance(reduce_halving_to_nested(instance, k)));
        return kFound;
    }
    const auto formula = parse_dimacs(read_file(file));
    const auto gadget = to == "ordered" ? sat3_to_ordered(formula) : sat3_to_overlapping(formula);
    write_output(out, with_tags(gadget));
    return kFound;
}

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
    std::string cls = "well-parenthesized";
    int n = 16;
    int pairs = 3;
    double density = 0.2;
    std::uint64_t seed = 1;
    bool no_backbone = false;
    std::string out;
};

int cmd_gen(const GenArgs& a)
{
    using namespace pafp;
    const auto cls = parse_structure_class(a.cls);
    if (!cls)
        throw Error(ErrorCode::Semantic, "unknown class '" + a.cls + "'");
    GenOptions g;
    g.cls = *cls;
    g.n = a.n;
    g.pairs = a.pairs;
    g.edge_density = a.density;
    g.seed = a.seed;
    g.backbone = !a.no_backbone;
    write_output(a.out, serialize_instance(gen_random(g)));
    return kFound;
}

// ---------------------------------------------------------------------------
// verify

pafp::Path parse_path(const std::string& text)
{
    pafp::Path path;
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ',')
            c = ' ';
    std::istringstream is(cleaned);
    std::string token;
    while (is >> token) {
        if (token == "path:")
            continue;
        try {
            std::size_t used = 0;
            const int v = std::stoi(token, &used);
            if (used != token.size())
                throw std::invalid_argument(token);
            path.push_back(v);
        } catch (const std::exception&) {
            throw pafp::Error(pafp::ErrorCode::Syntax, "bad vertex '" + token + "' in path");
        }
    }
    return path;
}

int cmd_verify(const std::string& file, const std::string& path_arg, const std::string& path_file)
{
    using namespace pafp;
    const auto instance = load_instance(file);
    const auto path = parse_path(path_file.empty() ? path_arg : read_file(path_file));
    check_path_structure(instance, path);
    if (const auto bad = first_violated_pair(instance, path)) {
        std::cout << "unsafe: path contains both members of pair {" << bad->left << ","
                  << bad->right << "}\n";
        return kNotFound;
    }
    std::cout << "safe\n";
    return kFound;
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
    std::vector<std::string> solvers{"cubic", "matrix"};
    std::vector<int> sizes{256, 512, 1024, 2048};
    int repeats = 3;
    std::uint64_t seed = 1;
    std::string csv;
    std::string svg;
    bool json = false;
};

int cmd_bench(const BenchArgs& a)
{
    using namespace pafp;
    BenchOptions o;
    o.solvers = a.solvers;
    o.sizes = a.sizes;
    o.repeats = a.repeats;
    o.seed = a.seed;
    o.time_cap_seconds = time_cap_from_env(o.time_cap_seconds);
    const auto report = run_bench(o);

    if (!a.csv.empty())
        write_output(a.csv, bench_csv(report));
    if (!a.svg.empty())
        write_output(a.svg, bench_svg(report));

    if (a.json) {
        json cells = json::array();
        for (const auto& c : report.cells)
            cells.push_back({{"solver", c.solver},
                             {"n", c.n},
                             {"median_ms", c.median_ms},
                             {"times_ms", c.times_ms},
                             {"seeds", c.seeds},
                             {"skipped", c.skipped}});
        json slopes = json::object();
        for (const auto& [solver, slope] : report.slope)
            slopes[solver] = slope ? json(*slope) : json(nullptr);
        json out{{"command", "bench"},  {"machine", report.machine}, {"workload", report.workload},
                 {"repeats", report.repeats}, {"seed", report.seed},      {"cells", cells},
                 {"slopes", slopes}};
        std::cout << out.dump(2) << "\n";
        return kFound;
    }
    std::cout << "# " << report.workload << "\n# " << report.machine << "\n";
    std::cout << bench_csv(report);
    for (const auto& [solver, slope] : report.slope) {
        std::cout << "slope " << solver << ": ";
        if (slope)
            std::cout << *slope << "\n";
        else
            std::cout << "omitted (fewer than 4 sizes)\n";
    }
    return kFound;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Paths avoiding forbidden pairs in topologically sorted DAGs"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "Look for a safe source-target path");
    s->add_option("instance", solve.file, "Instance file")->required();
    s->add_option("--solver", solve.solver, "Solver")
        ->check(CLI::IsMember({"auto", "cubic", "matrix", "rules", "disjoint", "halving", "oracle"}));
    s->add_flag("--min-violations", solve.min_violations,
                "Minimise the number of pairs fully on the path");
    s->add_flag("--json", solve.json, "Machine-readable report");
    s->add_option("--base-span", solve.base_span, "Matrix solver base block")->check(CLI::Range(2, 1 << 20));

    std::string classify_file;
    bool classify_json = false;
    auto* c = app.add_subcommand("classify", "Print the structure class of the pair set");
    c->add_option("instance", classify_file, "Instance file")->required();
    c->add_flag("--json", classify_json, "Machine-readable report");

    std::string reduce_to, reduce_file, reduce_out;
    int reduce_k = 1;
    auto* r = app.add_subcommand("reduce", "Build a gadget from CNF or a nested instance");
    r->add_option("--to", reduce_to, "Target")
        ->required()
        ->check(CLI::IsMember({"overlapping", "ordered", "nested"}));
    r->add_option("input", reduce_file, "DIMACS CNF (gadgets) or instance file (nested)")->required();
    r->add_option("-k", reduce_k, "Pair index for --to nested (1-based)");
    r->add_option("-o,--output", reduce_out, "Output file (default stdout)");

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Generate a random instance");
    g->add_option("--class", gen.cls, "Structure class");
    g->add_option("--n", gen.n, "Vertex count");
    g->add_option("--pairs", gen.pairs, "Forbidden pair count");
    g->add_option("--density", gen.density, "Edge probability");
    g->add_option("--seed", gen.seed, "Random seed");
    g->add_flag("--no-backbone", gen.no_backbone, "Omit the chain edges i -> i+1");
    g->add_option("-o,--output", gen.out, "Output file (default stdout)");

    std::string verify_file, verify_path, verify_path_file;
    auto* v = app.add_subcommand("verify", "Check a path against an instance");
    v->add_option("instance", verify_file, "Instance file")->required();
    auto* vp = v->add_option("--path", verify_path, "Vertices, space or comma separated");
    auto* vf = v->add_option("--path-file", verify_path_file, "File holding the path");
    vp->excludes(vf);
    v->callback([&] {
        if (verify_path.empty() && verify_path_file.empty())
            throw CLI::ValidationError("verify", "give --path or --path-file");
    });

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "Time solvers on generated well-parenthesized instances");
    b->add_option("--solvers", bench.solvers, "Comma separated solver list")->delimiter(',');
    b->add_option("--sizes", bench.sizes, "Comma separated vertex counts")->delimiter(',');
    b->add_option("--repeats", bench.repeats, "Instances per cell")->check(CLI::PositiveNumber);
    b->add_option("--seed", bench.seed, "First instance seed");
    b->add_option("--csv", bench.csv, "Write the table as CSV");
    b->add_option("--svg", bench.svg, "Write a log-log plot");
    b->add_flag("--json", bench.json, "Machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kError;
    }

    try {
        if (*s)
            return cmd_solve(solve);
        if (*c)
            return cmd_classify(classify_file, classify_json);
        if (*r)
            return cmd_reduce(reduce_to, reduce_file, reduce_k, reduce_out);
        if (*g)
            return cmd_gen(gen);
        if (*v)
            return cmd_verify(verify_file, verify_path, verify_path_file);
        if (*b)
            return cmd_bench(bench);
    } catch (const pafp::Error& e) {
        std::cerr << "error: ";
        if (e.line() > 0)
            std::cerr << "line " << e.line() << ": ";
        std::cerr << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
