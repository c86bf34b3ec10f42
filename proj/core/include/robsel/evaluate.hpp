#ifndef ROBSEL_EVALUATE_HPP
#define ROBSEL_EVALUATE_HPP

#include <optional>

#include "robsel/instance.hpp"
#include "robsel/selection.hpp"

namespace robsel {

/// Exact robust value of a solution together with a witness that reproduces
/// it: the maximizing scenario index (discrete sets), the realized cost
/// vector and deviation pattern (interval/budgeted sets) and the best
/// second-stage response where one exists.
struct EvaluationReport {
    Rational objective;
    std::optional<int> witness_scenario;
    std::optional<CostVector> witness_costs;
    std::optional<CostVector> witness_deviation;
    std::optional<SelectionSolution> second_stage;
};

/// Evaluates the robust objective of x under the instance's criterion and
/// uncertainty set, exactly. x must be PartialFirstStage for two-stage
/// instances and Full otherwise.
EvaluationReport evaluate_robust(const SelectionSolution& x, const ProblemInstance& inst);

struct BruteForceLimits {
    int max_n = 16;
    /// Enumerate all binary deviation patterns to double-check the witness
    /// of discrete-budgeted instances up to this size.
    int delta_enum_max_n = 12;
};

/// Independent oracle: enumerates every feasible first-stage solution and
/// returns the minimizer of evaluate_robust (ties: lexicographically
/// smallest support). Refuses instances above the size cap.
std::pair<SelectionSolution, Rational> brute_force_robust_opt(const ProblemInstance& inst,
                                                              const BruteForceLimits& limits = {});

} // namespace robsel

#endif
