#ifndef ROBSEL_SELECTION_HPP
#define ROBSEL_SELECTION_HPP

#include <utility>

#include "robsel/instance.hpp"

namespace robsel {

/// Picks the p cheapest items (ties broken by lowest index) and returns the
/// solution together with its exact cost.
std::pair<SelectionSolution, Rational> solve_nominal_selection(const CostVector& costs, int p);

/// Worst-case regret scenario for a full solution under an interval set:
/// chosen items at their upper bound, the rest at the lower bound.
CostVector worst_case_regret_scenario(const SelectionSolution& x, const CostVector& lower,
                                      const CostVector& deviation);

/// Cheapest completion of a partial first-stage solution to exactly p items,
/// drawn from items outside the support. Returns (y, cost of y).
std::pair<SelectionSolution, Rational> second_stage_completion(const SelectionSolution& x,
                                                               const CostVector& costs, int p);

/// Cheapest full solution that keeps at least `kept_min` items of x, via the
/// exchange sweep over the number of kept items. Ties prefer fewer exchanges
/// (larger overlap is not forced; smaller sweep index wins), then lower
/// item indices.
std::pair<SelectionSolution, Rational> recovery_best_response(const SelectionSolution& x,
                                                              const CostVector& costs, int p,
                                                              std::int64_t kept_min);

} // namespace robsel

#endif
