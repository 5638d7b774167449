#include "pafp/dp_solvers.hpp"
#include "pafp/matrix_solver.hpp"

#include "stopwatch.hpp"

namespace pafp {

SolveResult solve_auto(const Instance& instance, const AutoOptions& options)
{
    if (const auto errors = validate(instance); !errors.empty())
        throw Error(ErrorCode::Semantic, errors.front());
    Stopwatch sw;
    const auto split = split_shared_vertices(instance);
    const auto& work = split.instance;
    const auto cls = classify_instance(work).kind;

    SolveResult r;
    switch (cls) {
    case StructureClass::Disjoint:
        r = solve_disjoint(work);
        break;
    case StructureClass::Nested:
    case StructureClass::WellParenthesized:
        r = options.use_matrix ? solve_matrix(work, options.base_span) : solve_well_parenthesized(work);
        break;
    case StructureClass::Halving:
        r = solve_halving(work);
        break;
    default:
        r = brute_force_solve(work, options.oracle);
        break;
    }
    if (r.path)
        r.path = map_path(*r.path, split.origin);
    r.stats.solver = "auto";
    r.stats.elapsed_ms = sw.elapsed_ms();
    return r;
}

}  // namespace pafp
