#ifndef ROBSEL_FORMULATIONS_HPP
#define ROBSEL_FORMULATIONS_HPP

#include <map>
#include <string>

#include "robsel/evaluate.hpp"
#include "robsel/instance.hpp"
#include "robsel/milp/model.hpp"
#include "robsel/milp/solve.hpp"

namespace robsel {

/// Sorted, deduplicated candidate values of an enumerated dual variable.
struct BreakpointSet {
    std::vector<Rational> values;
    int size() const { return static_cast<int>(values.size()); }
};

/// Candidate (alpha, beta) dual pairs for the recoverable budgeted model.
struct BreakpointPairSet {
    std::vector<std::pair<Rational, Rational>> values;
    int size() const { return static_cast<int>(values.size()); }
};

/// {0} and every deviation value.
BreakpointSet minmax_budgeted_breakpoints(const CostVector& deviation);

/// {0}, every lower bound, every deviation and every upper bound. The upper
/// bounds are not in the narrowest published description of this set but are
/// required for exactness; enumerating a superset is always sound.
BreakpointSet regret_interval_breakpoints(const CostVector& lower, const CostVector& deviation);

/// {0}, every lower bound, every upper bound.
BreakpointSet completion_threshold_set(const CostVector& lower, const CostVector& deviation);

/// Pairs of cost levels for the recovery dual; beta entries are clipped gaps
/// between (possibly shifted) cost levels and alpha.
BreakpointPairSet recovery_pair_set(const CostVector& lower, const CostVector& deviation);

/// A built model plus everything needed to read a selection back out of an
/// assignment.
struct ModelBundle {
    milp::MilpModel model;
    std::map<std::string, std::string> varmap; // formulation symbol -> variable name
    std::vector<int> x_vars;
    SolutionRole role = SolutionRole::Full;
};

/// Nominal optimum per scenario.
std::vector<Rational> scenario_optima(const std::vector<CostVector>& scenarios, int p);

/// Translates a supported instance into its compact 0-1 model.
ModelBundle build_milp(const ProblemInstance& inst);

/// Reads the first-stage selection out of a solved model.
SelectionSolution extract_solution(const ModelBundle& bundle, const milp::SolveResult& result,
                                   double integrality_tol = 1e-6);

/// Breakpoint enumeration for min-max budgeted selection: try every
/// candidate dual value, solve the nominal problem on adjusted costs.
std::pair<SelectionSolution, Rational> solve_minmax_budgeted_enumeration(const ProblemInstance& inst);

/// Breakpoint enumeration for min-max regret under interval uncertainty.
std::pair<SelectionSolution, Rational> solve_regret_interval_enumeration(const ProblemInstance& inst);

/// Convenience wrapper: build, solve, extract, and re-evaluate exactly.
struct RobustSolveOutcome {
    milp::SolveStatus status = milp::SolveStatus::NumericalError;
    SelectionSolution solution;
    Rational value; // exact robust value of `solution` (re-evaluated)
    milp::SolveResult raw;
};
RobustSolveOutcome solve_robust(const ProblemInstance& inst, const milp::SolverConfig& cfg = {});

} // namespace robsel

#endif
