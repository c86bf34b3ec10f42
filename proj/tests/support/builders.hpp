#ifndef ROBSEL_TESTS_BUILDERS_HPP
#define ROBSEL_TESTS_BUILDERS_HPP

// Shared helpers for constructing small instances in tests.

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "robsel/instance.hpp"
#include "robsel/rng.hpp"

namespace robsel::test {

inline CostVector costs(std::initializer_list<std::int64_t> vals) {
    CostVector v;
    for (auto x : vals) v.push_back(Rational(x));
    return v;
}

inline CostVector costs(const std::vector<std::int64_t>& vals) {
    CostVector v;
    for (auto x : vals) v.push_back(Rational(x));
    return v;
}

inline SelectionSolution full(int n, std::initializer_list<int> items) {
    return SelectionSolution::from_support(n, items, SolutionRole::Full);
}

inline SelectionSolution partial(int n, std::initializer_list<int> items) {
    return SelectionSolution::from_support(n, items, SolutionRole::PartialFirstStage);
}

inline ProblemInstance minmax_discrete(int p, std::vector<std::vector<std::int64_t>> scenarios) {
    ProblemInstance inst;
    inst.n = static_cast<int>(scenarios.at(0).size());
    inst.p = p;
    inst.criterion = Criterion::MinMax;
    std::vector<CostVector> rows;
    for (auto& s : scenarios) rows.push_back(costs(s));
    inst.uncertainty = UncertaintySet::make_discrete(std::move(rows));
    return inst;
}

inline ProblemInstance regret_discrete(int p, std::vector<std::vector<std::int64_t>> scenarios) {
    auto inst = minmax_discrete(p, std::move(scenarios));
    inst.criterion = Criterion::MinMaxRegret;
    return inst;
}

inline ProblemInstance regret_interval(int p, std::vector<std::int64_t> lower,
                                       std::vector<std::int64_t> dev) {
    ProblemInstance inst;
    inst.n = static_cast<int>(lower.size());
    inst.p = p;
    inst.criterion = Criterion::MinMaxRegret;
    inst.uncertainty = UncertaintySet::make_interval(costs(lower), costs(dev));
    return inst;
}

inline ProblemInstance minmax_budgeted(int p, std::vector<std::int64_t> lower,
                                       std::vector<std::int64_t> dev, Rational gamma,
                                       BudgetMode mode = BudgetMode::ContinuousItems) {
    ProblemInstance inst;
    inst.n = static_cast<int>(lower.size());
    inst.p = p;
    inst.criterion = Criterion::MinMax;
    inst.uncertainty = UncertaintySet::make_budgeted(costs(lower), costs(dev), gamma, mode);
    return inst;
}

inline ProblemInstance two_stage_discrete(int p, std::vector<std::int64_t> first_stage,
                                          std::vector<std::vector<std::int64_t>> scenarios) {
    ProblemInstance inst;
    inst.n = static_cast<int>(first_stage.size());
    inst.p = p;
    inst.criterion = Criterion::TwoStage;
    inst.first_stage_costs = costs(first_stage);
    std::vector<CostVector> rows;
    for (auto& s : scenarios) rows.push_back(costs(s));
    inst.uncertainty = UncertaintySet::make_discrete(std::move(rows));
    return inst;
}

inline ProblemInstance recoverable_discrete(int p, std::vector<std::int64_t> first_stage,
                                            std::vector<std::vector<std::int64_t>> scenarios,
                                            std::int64_t delta, DeltaSemantics semantics) {
    auto inst = two_stage_discrete(p, std::move(first_stage), std::move(scenarios));
    inst.criterion = Criterion::Recoverable;
    inst.delta = delta;
    inst.delta_semantics = semantics;
    return inst;
}

/// Uniform random instance of one of the ten supported pairings, for
/// property tests. Cost magnitudes alternate between a narrow range (to
/// stress tie handling) and the full 0..100 range.
inline ProblemInstance random_instance(int pairing, SplitMix64& rng, int max_n = 8) {
    ProblemInstance inst;
    inst.n = 3 + static_cast<int>(rng.uniform_int(0, max_n - 3));
    inst.p = 1 + static_cast<int>(rng.uniform_int(0, std::min(inst.n, 5) - 1));
    const std::int64_t hi = rng.coin() ? 12 : 100;
    auto vec = [&](std::int64_t lo = 0) {
        CostVector v;
        for (int i = 0; i < inst.n; ++i) v.push_back(Rational(rng.uniform_int(lo, hi)));
        return v;
    };
    auto scenarios = [&] {
        const int N = 1 + static_cast<int>(rng.uniform_int(0, 3));
        std::vector<CostVector> rows;
        for (int j = 0; j < N; ++j) rows.push_back(vec());
        return rows;
    };
    Rational item_gamma(rng.uniform_int(0, 3));
    Rational mass_gamma(rng.uniform_int(0, 15));

    switch (pairing) {
        case 0:
            inst.criterion = Criterion::MinMax;
            inst.uncertainty = UncertaintySet::make_discrete(scenarios());
            break;
        case 1:
            inst.criterion = Criterion::MinMax;
            inst.uncertainty = UncertaintySet::make_budgeted(
                vec(), vec(), item_gamma,
                rng.coin() ? BudgetMode::ContinuousItems : BudgetMode::DiscreteItems);
            break;
        case 2:
            inst.criterion = Criterion::MinMaxRegret;
            inst.uncertainty = UncertaintySet::make_interval(vec(), vec());
            break;
        case 3:
            inst.criterion = Criterion::MinMaxRegret;
            inst.uncertainty = UncertaintySet::make_discrete(scenarios());
            break;
        case 4:
            inst.criterion = Criterion::TwoStage;
            inst.first_stage_costs = vec();
            inst.uncertainty = UncertaintySet::make_discrete(scenarios());
            break;
        case 5:
            inst.criterion = Criterion::TwoStage;
            inst.first_stage_costs = vec();
            inst.uncertainty =
                UncertaintySet::make_budgeted(vec(), vec(), item_gamma, BudgetMode::DiscreteItems);
            break;
        case 6:
            inst.criterion = Criterion::TwoStage;
            inst.first_stage_costs = vec();
            inst.uncertainty =
                UncertaintySet::make_budgeted(vec(), vec(), mass_gamma, BudgetMode::VariableBudget);
            break;
        case 7:
            inst.criterion = Criterion::Recoverable;
            inst.first_stage_costs = vec();
            inst.uncertainty = UncertaintySet::make_discrete(scenarios());
            break;
        case 8:
            inst.criterion = Criterion::Recoverable;
            inst.first_stage_costs = vec();
            inst.uncertainty =
                UncertaintySet::make_budgeted(vec(), vec(), item_gamma, BudgetMode::DiscreteItems);
            break;
        case 9:
            inst.criterion = Criterion::Recoverable;
            inst.first_stage_costs = vec();
            inst.uncertainty =
                UncertaintySet::make_budgeted(vec(), vec(), mass_gamma, BudgetMode::VariableBudget);
            break;
        default: throw std::invalid_argument("pairing index out of range");
    }
    if (inst.criterion == Criterion::Recoverable) {
        inst.delta = rng.uniform_int(0, inst.p);
        inst.delta_semantics = rng.coin() ? DeltaSemantics::KeptAtLeast : DeltaSemantics::ChangedAtMost;
    }
    return inst;
}

} // namespace robsel::test

#endif
