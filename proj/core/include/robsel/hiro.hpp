#ifndef ROBSEL_HIRO_HPP
#define ROBSEL_HIRO_HPP

#include "robsel/instance.hpp"
#include "robsel/milp/model.hpp"

namespace robsel {

enum class HiroMode {
    FirstStageOnly,      // discrete two-stage/recoverable: perturb C only
    FirstAndSecondStage, // discrete two-stage/recoverable: perturb C and all scenarios
    LowerBounds,         // budgeted: perturb the lower bounds
    Deviations,          // budgeted: perturb the deviations
    Both,                // budgeted: perturb both vectors
};

const char* to_string(HiroMode m);

struct HiroConfig {
    Rational b;                      // per-coefficient perturbation budget
    Rational c_max = Rational(100);  // global cost cap
    double time_limit_seconds = 600.0;
    int max_iterations = 64;
    milp::SolverConfig solver;
    HiroMode mode = HiroMode::FirstAndSecondStage;
};

/// Per-coefficient box around a base vector, clipped to [0, c_max], with the
/// vector sum not allowed to increase.
class PerturbationNeighborhood {
public:
    PerturbationNeighborhood(CostVector base, Rational b, Rational c_max);

    const CostVector& base() const { return base_; }
    Rational lower_bound(std::size_t i) const;
    Rational upper_bound(std::size_t i) const;
    Rational sum_cap() const;

    bool contains(const CostVector& candidate) const;

    /// Snaps solver output onto a bounded-denominator grid inside the box
    /// and repairs the sum cap exactly. The result always satisfies
    /// contains().
    CostVector clamp(const std::vector<double>& values) const;

private:
    CostVector base_;
    Rational b_;
    Rational c_max_;
};

struct HiroIterationRecord {
    int candidate_count = 0;
    double master_objective = 0.0;
    Rational hardened_value; // exact robust optimum of this iteration's instance
    double elapsed_seconds = 0.0;
};

struct HiroTrace {
    std::vector<HiroIterationRecord> iterations;
    Rational input_value;
    Rational best_value;
    bool converged = false;
};

/// Master/sub loop for discrete-uncertainty instances (all four criteria).
/// Returns the best-so-far hardened instance: every intermediate instance is
/// re-solved exactly and the one with the largest robust optimum wins (ties
/// prefer the latest). With b = 0 the input is returned unchanged.
std::pair<ProblemInstance, HiroTrace> harden_iterative(const ProblemInstance& inst,
                                                       const HiroConfig& cfg);

/// Single-shot LP hardening for min-max budgeted instances. Modes
/// LowerBounds, Deviations, Both. For the deviation modes the items are
/// re-indexed by non-decreasing input deviation first (the permutation is
/// recorded in the provenance lineage).
ProblemInstance harden_budgeted(const ProblemInstance& inst, const HiroConfig& cfg);

/// Single-shot MILP hardening for min-max regret interval instances.
ProblemInstance harden_regret_interval(const ProblemInstance& inst, const HiroConfig& cfg);

} // namespace robsel

#endif
