#ifndef PAFP_BENCH_HPP
#define PAFP_BENCH_HPP

#include "pafp/core.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pafp {

struct BenchOptions {
    std::vector<std::string> solvers{"cubic", "matrix"};
    std::vector<int> sizes{256, 512, 1024, 2048};
    int repeats = 3;
    std::uint64_t seed = 1;
    /// Per-cell cap; a cell whose slowest run exceeds it is marked skipped
    /// together with every larger size of that solver.
    double time_cap_seconds = 300.0;
};

struct BenchCell {
    std::string solver;
    int n = 0;
    std::vector<std::uint64_t> seeds;
    std::vector<double> times_ms;
    double median_ms = 0.0;
    bool skipped = false;
};

struct BenchReport {
    std::vector<BenchCell> cells;
    std::map<std::string, std::optional<double>> slope;  // per solver
    std::string machine;
    std::string workload;
    int repeats = 0;
    std::uint64_t seed = 0;
};

/// Solvers accepted by run_bench.
const std::vector<std::string>& bench_solvers();

/// Well-parenthesized, |F| = max(3, n/8), edge density 4/n plus the chain
/// backbone, source 0, target n-1.
Instance bench_instance(int n, std::uint64_t seed);

/// Least-squares slope of log(y) against log(x).
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Reads PAFP_TIME_CAP_SECONDS when set, else `fallback`.
double time_cap_from_env(double fallback);

BenchReport run_bench(const BenchOptions& options);

std::string bench_csv(const BenchReport& report);
std::string bench_svg(const BenchReport& report);

}  // namespace pafp

#endif
