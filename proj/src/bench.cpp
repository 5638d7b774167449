#include "pafp/bench.hpp"

#include "pafp/dp_solvers.hpp"
#include "pafp/matrix_solver.hpp"
#include "pafp/reductions.hpp"

#include "stopwatch.hpp"

#include <sys/utsname.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pafp {

namespace {

using SolverFn = std::function<SolveResult(const Instance&)>;

SolverFn solver_by_name(const std::string& name)
{
    if (name == "cubic")
        return [](const Instance& i) { return solve_well_parenthesized(i); };
    if (name == "matrix")
        return [](const Instance& i) { return solve_matrix(i); };
    if (name == "rules")
        return [](const Instance& i) { return solve_by_rules(i); };
    if (name == "auto")
        return [](const Instance& i) { return solve_auto(i); };
    if (name == "oracle")
        return [](const Instance& i) { return brute_force_solve(i); };
    throw Error(ErrorCode::WrongClass, "solver '" + name + "' cannot run on the bench workload");
}

std::string machine_descriptor()
{
    std::ostringstream os;
    utsname u{};
    if (uname(&u) == 0)
        os << u.sysname << " " << u.release << " " << u.machine << ", ";
    os << std::thread::hardware_concurrency() << " hw threads, ";
#if defined(__clang__)
    os << "clang " << __clang_major__ << "." << __clang_minor__;
#elif defined(__GNUC__)
    os << "gcc " << __GNUC__ << "." << __GNUC_MINOR__;
#endif
    return os.str();
}

double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const auto m = v.size() / 2;
    return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2.0;
}

}  // namespace

const std::vector<std::string>& bench_solvers()
{
    static const std::vector<std::string> names{"cubic", "matrix", "rules", "auto", "oracle"};
    return names;
}

Instance bench_instance(int n, std::uint64_t seed)
{
    GenOptions g;
    g.cls = StructureClass::WellParenthesized;
    g.n = n;
    g.pairs = std::max(3, n / 8);
    g.edge_density = std::min(1.0, 4.0 / n);
    g.seed = seed;
    g.backbone = true;
    return gen_random(g);
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("slope needs at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double k = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

double time_cap_from_env(double fallback)
{
    if (const char* env = std::getenv("PAFP_TIME_CAP_SECONDS")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0)
            return v;
    }
    return fallback;
}

BenchReport run_bench(const BenchOptions& options)
{
    if (options.repeats < 1)
        throw std::invalid_argument("repeats must be positive");
    BenchReport report;
    report.machine = machine_descriptor();
    report.workload = "well-parenthesized, pairs=max(3,n/8), density=4/n, chain backbone";
    report.repeats = options.repeats;
    report.seed = options.seed;

    auto sizes = options.sizes;
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

    for (const auto& name : options.solvers) {
        const auto solve = solver_by_name(name);
        bool capped = false;
        std::vector<double> xs, ys;
        for (int n : sizes) {
            BenchCell cell;
            cell.solver = name;
            cell.n = n;
            for (int r = 0; r < options.repeats; ++r)
                cell.seeds.push_back(options.seed + static_cast<std::uint64_t>(r));
            if (capped) {
                cell.skipped = true;
                report.cells.push_back(std::move(cell));
                continue;
            }
            for (auto seed : cell.seeds) {
                const auto instance = bench_instance(n, seed);
                Stopwatch sw;
                solve(instance);
                cell.times_ms.push_back(sw.elapsed_ms());
                if (cell.times_ms.back() > options.time_cap_seconds * 1000.0) {
                    capped = true;
                    break;
                }
            }
            cell.median_ms = median(cell.times_ms);
            cell.skipped = capped;
            if (!capped) {
                xs.push_back(n);
                ys.push_back(std::max(cell.median_ms, 1e-3));
            }
            report.cells.push_back(std::move(cell));
        }
        report.slope[name] = xs.size() >= 4 ? std::optional(fit_loglog_slope(xs, ys)) : std::nullopt;
    }
    return report;
}

std::string bench_csv(const BenchReport& report)
{
    std::ostringstream os;
    os << "solver,n,median_ms,repeats,skipped,seeds\n";
    for (const auto& c : report.cells) {
        os << c.solver << "," << c.n << "," << c.median_ms << "," << c.times_ms.size() << ","
           << (c.skipped ? 1 : 0) << ",";
        for (std::size_t i = 0; i < c.seeds.size(); ++i)
            os << (i ? ";" : "") << c.seeds[i];
        os << "\n";
    }
    return os.str();
}

// Log-log scatter, one polyline per solver.
std::string bench_svg(const BenchReport& report)
{
    const double W = 640, H = 420, pad = 50;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& c : report.cells) {
        if (c.skipped || c.median_ms <= 0)
            continue;
        xmin = std::min(xmin, std::log(c.n));
        xmax = std::max(xmax, std::log(c.n));
        ymin = std::min(ymin, std::log(c.median_ms));
        ymax = std::max(ymax, std::log(c.median_ms));
    }
    if (xmax <= xmin)
        xmax = xmin + 1;
    if (ymax <= ymin)
        ymax = ymin + 1;
    auto px = [&](double lx) { return pad + (lx - xmin) / (xmax - xmin) * (W - 2 * pad); };
    auto py = [&](double ly) { return H - pad - (ly - ymin) / (ymax - ymin) * (H - 2 * pad); };

    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << W / 2 << "\" y=\"" << H - 10
       << "\" text-anchor=\"middle\" font-size=\"12\">log n</text>\n";
    os << "<text x=\"12\" y=\"" << H / 2 << "\" font-size=\"12\">log ms</text>\n";
    int index = 0;
    for (const auto& [solver, slope] : report.slope) {
        const char* color = colors[index % 5];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
        for (const auto& c : report.cells)
            if (c.solver == solver && !c.skipped && c.median_ms > 0)
                os << px(std::log(c.n)) << "," << py(std::log(c.median_ms)) << " ";
        os << "\"/>\n";
        os << "<text x=\"" << pad << "\" y=\"" << 20 + 16 * index << "\" fill=\"" << color
           << "\" font-size=\"12\">" << solver;
        if (slope)
            os << " slope " << *slope;
        os << "</text>\n";
        ++index;
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace pafp
