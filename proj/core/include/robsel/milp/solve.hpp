#ifndef ROBSEL_MILP_SOLVE_HPP
#define ROBSEL_MILP_SOLVE_HPP

#include "robsel/milp/model.hpp"

namespace robsel::milp {

/// Solves the LP relaxation (binaries treated as continuous in [0,1]).
/// Deterministic: Dantzig pricing with a Bland fallback after a degeneracy
/// stall, ties always broken by lowest index.
SolveResult solve_lp(const MilpModel& m, const SolverConfig& cfg = {});

/// Depth-first branch and bound on the binary variables, best-bound node
/// selection on backtrack, branching on the most fractional binary (ties by
/// lowest index). No presolve, no cuts, no primal heuristics, so node counts
/// are comparable across runs.
SolveResult solve_milp(const MilpModel& m, const SolverConfig& cfg = {});

/// Exact rational LP solve. Slow; meant for oracle-grade evaluations and
/// certification of small models. Throws std::overflow_error if an exact
/// value does not fit the 64-bit rational type.
struct ExactLpResult {
    SolveStatus status = SolveStatus::NumericalError;
    Rational objective;             // includes objective constant
    std::vector<Rational> values;   // by variable index
    std::vector<Rational> row_duals; // per constraint, in the model's sense
};
ExactLpResult solve_lp_exact(const MilpModel& m);

/// Re-checks a candidate assignment against bounds and constraints.
bool verify_assignment(const MilpModel& m, const std::vector<double>& values, double feas_tol);

} // namespace robsel::milp

#endif
