#include "robsel/evaluate.hpp"

#include <algorithm>
#include <stdexcept>

#include "robsel/milp/model.hpp"
#include "robsel/milp/solve.hpp"

namespace robsel {

namespace {

Rational positive_part(const Rational& r) { return r.is_negative() ? Rational(0) : r; }

// Sum of the gamma largest entries, with a fractional share of the next one
// when gamma is not integral. Entries are assumed non-negative.
Rational top_budget_sum(std::vector<Rational> values, const Rational& gamma) {
    std::sort(values.begin(), values.end(), [](const Rational& a, const Rational& b) { return b < a; });
    std::int64_t whole = floor(gamma);
    Rational frac = gamma - Rational(whole);
    Rational total;
    std::int64_t k = std::min<std::int64_t>(whole, static_cast<std::int64_t>(values.size()));
    for (std::int64_t i = 0; i < k; ++i) total += values[static_cast<std::size_t>(i)];
    if (k == whole && !frac.is_zero() && k < static_cast<std::int64_t>(values.size())) {
        total += frac * values[static_cast<std::size_t>(k)];
    }
    return total;
}

// Indices of the floor(gamma) largest entries plus a fractional pick,
// mirroring top_budget_sum; ties by lower index. Returns per-index share of
// deviation taken (0, 1 or the fractional remainder).
std::vector<Rational> top_budget_pattern(const std::vector<Rational>& values, const Rational& gamma) {
    std::vector<int> order(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (values[a] != values[b]) return values[b] < values[a];
        return a < b;
    });
    std::vector<Rational> share(values.size(), Rational(0));
    std::int64_t whole = floor(gamma);
    Rational frac = gamma - Rational(whole);
    std::int64_t k = std::min<std::int64_t>(whole, static_cast<std::int64_t>(values.size()));
    for (std::int64_t i = 0; i < k; ++i) share[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = Rational(1);
    if (k == whole && !frac.is_zero() && k < static_cast<std::int64_t>(values.size())) {
        share[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = frac;
    }
    return share;
}

struct AlphaValue {
    Rational alpha;
    Rational beta; // zero for the two-stage (single-threshold) family
};

// Candidate completion-cost thresholds: zero, every lower bound, every upper
// bound. A superset of the needed breakpoints is harmless.
std::vector<Rational> threshold_set(const CostVector& lower, const CostVector& deviation) {
    std::vector<Rational> vals;
    vals.push_back(Rational(0));
    for (std::size_t i = 0; i < lower.size(); ++i) {
        vals.push_back(lower[i]);
        vals.push_back(lower[i] + deviation[i]);
    }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

// Candidate (alpha, beta) pairs for the recovery dual: alpha a realized cost
// level, beta a clipped gap between two realized cost levels. Both sign
// readings of the gap are included; extra pairs only weaken nothing since
// every pair is dual-feasible.
std::vector<AlphaValue> recovery_pair_set(const CostVector& lower, const CostVector& deviation) {
    std::vector<Rational> alphas;
    alphas.push_back(Rational(0));
    for (std::size_t i = 0; i < lower.size(); ++i) {
        alphas.push_back(lower[i]);
        alphas.push_back(lower[i] + deviation[i]);
    }
    std::sort(alphas.begin(), alphas.end());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());

    std::vector<AlphaValue> pairs;
    for (const auto& alpha : alphas) {
        std::vector<Rational> betas;
        betas.push_back(Rational(0));
        for (std::size_t j = 0; j < lower.size(); ++j) {
            betas.push_back(positive_part(lower[j] - alpha));
            betas.push_back(positive_part(lower[j] - deviation[j] - alpha));
            betas.push_back(positive_part(lower[j] + deviation[j] - alpha));
        }
        std::sort(betas.begin(), betas.end());
        betas.erase(std::unique(betas.begin(), betas.end()), betas.end());
        for (const auto& beta : betas) pairs.push_back(AlphaValue{alpha, beta});
    }
    return pairs;
}

EvaluationReport eval_minmax_discrete(const SelectionSolution& x, const DiscreteSet& u) {
    EvaluationReport rep;
    bool first = true;
    for (std::size_t j = 0; j < u.scenarios.size(); ++j) {
        Rational v = dot(u.scenarios[j], x.chosen);
        if (first || rep.objective < v) {
            first = false;
            rep.objective = v;
            rep.witness_scenario = static_cast<int>(j);
        }
    }
    return rep;
}

EvaluationReport eval_regret_discrete(const SelectionSolution& x, const DiscreteSet& u, int p) {
    EvaluationReport rep;
    bool first = true;
    for (std::size_t j = 0; j < u.scenarios.size(); ++j) {
        auto [yopt, opt] = solve_nominal_selection(u.scenarios[j], p);
        Rational v = dot(u.scenarios[j], x.chosen) - opt;
        if (first || rep.objective < v) {
            first = false;
            rep.objective = v;
            rep.witness_scenario = static_cast<int>(j);
            rep.second_stage = yopt;
        }
    }
    return rep;
}

EvaluationReport eval_regret_interval(const SelectionSolution& x, const IntervalSet& u, int p) {
    EvaluationReport rep;
    CostVector c = worst_case_regret_scenario(x, u.lower, u.deviation);
    auto [yopt, opt] = solve_nominal_selection(c, p);
    rep.objective = dot(c, x.chosen) - opt;
    rep.witness_costs = std::move(c);
    rep.second_stage = yopt;
    return rep;
}

EvaluationReport eval_minmax_budgeted(const SelectionSolution& x, const BudgetedSet& u) {
    EvaluationReport rep;
    const std::size_t n = u.lower.size();
    Rational base = dot(u.lower, x.chosen);
    CostVector deviation_pattern(n, Rational(0));

    if (u.mode == BudgetMode::VariableBudget) {
        // deviation mass fills the chosen items greedily
        Rational capacity;
        for (std::size_t i = 0; i < n; ++i) {
            if (x.chosen[i]) capacity += u.deviation[i];
        }
        Rational used = min(u.gamma, capacity);
        rep.objective = base + used;
        Rational remaining = used;
        std::vector<int> order;
        for (std::size_t i = 0; i < n; ++i) {
            if (x.chosen[i]) order.push_back(static_cast<int>(i));
        }
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (u.deviation[a] != u.deviation[b]) return u.deviation[b] < u.deviation[a];
            return a < b;
        });
        for (int i : order) {
            if (remaining.is_zero()) break;
            Rational take = min(remaining, u.deviation[static_cast<std::size_t>(i)]);
            deviation_pattern[static_cast<std::size_t>(i)] = take;
            remaining -= take;
        }
    } else {
        // up to gamma chosen items deviate, fractional top-up for non-integral gamma
        std::vector<Rational> devs;
        std::vector<int> devs_idx;
        for (std::size_t i = 0; i < n; ++i) {
            if (x.chosen[i]) {
                devs.push_back(u.deviation[i]);
                devs_idx.push_back(static_cast<int>(i));
            }
        }
        rep.objective = base + top_budget_sum(devs, u.gamma);
        auto share = top_budget_pattern(devs, u.gamma);
        for (std::size_t k = 0; k < share.size(); ++k) {
            deviation_pattern[static_cast<std::size_t>(devs_idx[k])] = share[k];
        }
    }

    // realized costs: variable budget adds the mass itself, the item modes
    // add the deviation scaled by its share
    CostVector realized = u.lower;
    for (std::size_t i = 0; i < n; ++i) {
        if (u.mode == BudgetMode::VariableBudget) {
            realized[i] += deviation_pattern[i];
        } else {
            realized[i] += deviation_pattern[i] * u.deviation[i];
        }
    }
    rep.witness_costs = std::move(realized);
    rep.witness_deviation = std::move(deviation_pattern);
    return rep;
}

EvaluationReport eval_two_stage_discrete(const SelectionSolution& x, const ProblemInstance& inst) {
    EvaluationReport rep;
    const auto& scenarios = inst.uncertainty.discrete.scenarios;
    Rational first_stage = dot(*inst.first_stage_costs, x.chosen);
    bool first = true;
    for (std::size_t j = 0; j < scenarios.size(); ++j) {
        auto [y, q] = second_stage_completion(x, scenarios[j], inst.p);
        Rational v = first_stage + q;
        if (first || rep.objective < v) {
            first = false;
            rep.objective = v;
            rep.witness_scenario = static_cast<int>(j);
            rep.second_stage = y;
        }
    }
    return rep;
}

EvaluationReport eval_recoverable_discrete(const SelectionSolution& x, const ProblemInstance& inst) {
    EvaluationReport rep;
    const auto& scenarios = inst.uncertainty.discrete.scenarios;
    Rational first_stage = dot(*inst.first_stage_costs, x.chosen);
    const std::int64_t kept = inst.kept_min();
    bool first = true;
    for (std::size_t j = 0; j < scenarios.size(); ++j) {
        auto [y, q] = recovery_best_response(x, scenarios[j], inst.p, kept);
        Rational v = first_stage + q;
        if (first || rep.objective < v) {
            first = false;
            rep.objective = v;
            rep.witness_scenario = static_cast<int>(j);
            rep.second_stage = y;
        }
    }
    return rep;
}

// Discrete-budgeted second/recovery stage: enumerate dual thresholds, the
// adversary's budget part reduces to a top-gamma partial sum of per-item
// gains.
EvaluationReport eval_two_stage_discrete_budgeted(const SelectionSolution& x,
                                                  const ProblemInstance& inst) {
    const auto& u = inst.uncertainty.budgeted;
    const int n = inst.n;
    const Rational first_stage = dot(*inst.first_stage_costs, x.chosen);
    const int missing = inst.p - x.count();

    EvaluationReport rep;
    bool first = true;
    Rational best_alpha;
    for (const auto& alpha : threshold_set(u.lower, u.deviation)) {
        Rational value = Rational(missing) * alpha;
        std::vector<Rational> gains;
        gains.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            if (x.chosen[static_cast<std::size_t>(i)]) continue;
            const Rational& lo = u.lower[static_cast<std::size_t>(i)];
            const Rational& d = u.deviation[static_cast<std::size_t>(i)];
            value -= positive_part(alpha - lo);
            gains.push_back(positive_part(alpha - lo) - positive_part(alpha - lo - d));
        }
        value += top_budget_sum(gains, u.gamma);
        if (first || rep.objective < value) {
            first = false;
            rep.objective = value;
            best_alpha = alpha;
        }
    }
    rep.objective += first_stage;

    // reconstruct the worst-case deviation pattern at the best threshold
    std::vector<Rational> gains(static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i) {
        if (x.chosen[static_cast<std::size_t>(i)]) continue;
        const Rational& lo = u.lower[static_cast<std::size_t>(i)];
        const Rational& d = u.deviation[static_cast<std::size_t>(i)];
        gains[static_cast<std::size_t>(i)] =
            positive_part(best_alpha - lo) - positive_part(best_alpha - lo - d);
    }
    auto share = top_budget_pattern(gains, u.gamma);
    CostVector deviation_pattern(static_cast<std::size_t>(n), Rational(0));
    CostVector realized = u.lower;
    for (int i = 0; i < n; ++i) {
        deviation_pattern[static_cast<std::size_t>(i)] = share[static_cast<std::size_t>(i)];
        realized[static_cast<std::size_t>(i)] +=
            share[static_cast<std::size_t>(i)] * u.deviation[static_cast<std::size_t>(i)];
    }
    auto [y, q] = second_stage_completion(x, realized, inst.p);
    rep.witness_costs = std::move(realized);
    rep.witness_deviation = std::move(deviation_pattern);
    rep.second_stage = y;
    return rep;
}

EvaluationReport eval_recoverable_discrete_budgeted(const SelectionSolution& x,
                                                    const ProblemInstance& inst) {
    const auto& u = inst.uncertainty.budgeted;
    const int n = inst.n;
    const Rational first_stage = dot(*inst.first_stage_costs, x.chosen);
    const Rational kept = Rational(inst.kept_min());

    EvaluationReport rep;
    bool first = true;
    AlphaValue best{};
    for (const auto& pair : recovery_pair_set(u.lower, u.deviation)) {
        Rational value = Rational(inst.p) * pair.alpha + kept * pair.beta;
        std::vector<Rational> gains;
        gains.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const Rational& lo = u.lower[static_cast<std::size_t>(i)];
            const Rational& d = u.deviation[static_cast<std::size_t>(i)];
            Rational level = x.chosen[static_cast<std::size_t>(i)] ? pair.alpha + pair.beta : pair.alpha;
            value -= positive_part(level - lo);
            gains.push_back(positive_part(level - lo) - positive_part(level - lo - d));
        }
        value += top_budget_sum(gains, u.gamma);
        if (first || rep.objective < value) {
            first = false;
            rep.objective = value;
            best = pair;
        }
    }
    rep.objective += first_stage;

    std::vector<Rational> gains(static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i) {
        const Rational& lo = u.lower[static_cast<std::size_t>(i)];
        const Rational& d = u.deviation[static_cast<std::size_t>(i)];
        Rational level = x.chosen[static_cast<std::size_t>(i)] ? best.alpha + best.beta : best.alpha;
        gains[static_cast<std::size_t>(i)] = positive_part(level - lo) - positive_part(level - lo - d);
    }
    auto share = top_budget_pattern(gains, u.gamma);
    CostVector deviation_pattern(static_cast<std::size_t>(n), Rational(0));
    CostVector realized = u.lower;
    for (int i = 0; i < n; ++i) {
        deviation_pattern[static_cast<std::size_t>(i)] = share[static_cast<std::size_t>(i)];
        realized[static_cast<std::size_t>(i)] +=
            share[static_cast<std::size_t>(i)] * u.deviation[static_cast<std::size_t>(i)];
    }
    auto [y, q] = recovery_best_response(x, realized, inst.p, inst.kept_min());
    rep.witness_costs = std::move(realized);
    rep.witness_deviation = std::move(deviation_pattern);
    rep.second_stage = y;
    return rep;
}

// Variable-budget second/recovery stage: exact rational LP on the compact
// model with x fixed. The duals of the coupling rows are the adversary's
// deviation masses.
EvaluationReport eval_variable_budget_second_stage(const SelectionSolution& x,
                                                   const ProblemInstance& inst) {
    using namespace milp;
    const auto& u = inst.uncertainty.budgeted;
    const int n = inst.n;
    const bool recoverable = inst.criterion == Criterion::Recoverable;

    MilpModel m;
    std::vector<int> yv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Rational ub = recoverable ? Rational(1)
                                  : Rational(1 - x.chosen[static_cast<std::size_t>(i)]);
        yv[static_cast<std::size_t>(i)] = m.add_continuous("y[" + std::to_string(i) + "]", Rational(0), ub);
    }
    int pi = m.add_continuous("pi", Rational(0), std::nullopt);
    std::vector<int> rho(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        rho[static_cast<std::size_t>(i)] = m.add_continuous("rho[" + std::to_string(i) + "]", Rational(0), std::nullopt);
    }

    std::vector<Term> obj;
    for (int i = 0; i < n; ++i) obj.push_back({yv[static_cast<std::size_t>(i)], u.lower[static_cast<std::size_t>(i)]});
    obj.push_back({pi, u.gamma});
    for (int i = 0; i < n; ++i) obj.push_back({rho[static_cast<std::size_t>(i)], u.deviation[static_cast<std::size_t>(i)]});

    // cardinality of the second stage
    std::vector<Term> card;
    for (int i = 0; i < n; ++i) card.push_back({yv[static_cast<std::size_t>(i)], Rational(1)});
    m.add_constraint(card, Relation::Equal,
                     recoverable ? Rational(inst.p) : Rational(inst.p - x.count()));

    if (recoverable) {
        // keep at least kept_min items of x: sum_{i in x} y_i >= kept_min
        std::vector<Term> keep;
        for (int i = 0; i < n; ++i) {
            if (x.chosen[static_cast<std::size_t>(i)]) keep.push_back({yv[static_cast<std::size_t>(i)], Rational(1)});
        }
        if (!keep.empty()) {
            m.add_constraint(keep, Relation::GreaterEqual, Rational(inst.kept_min()));
        }
    }

    // coupling rows: pi + rho_i >= y_i; duals are the deviation masses
    int first_coupling_row = m.constraint_count();
    for (int i = 0; i < n; ++i) {
        m.add_constraint({{pi, Rational(1)}, {rho[static_cast<std::size_t>(i)], Rational(1)}, {yv[static_cast<std::size_t>(i)], Rational(-1)}},
                         Relation::GreaterEqual, Rational(0));
    }
    m.set_objective(obj, Sense::Minimize);

    auto lp = solve_lp_exact(m);
    if (lp.status != SolveStatus::Optimal) {
        throw std::runtime_error("second-stage evaluation LP not optimal");
    }

    EvaluationReport rep;
    rep.objective = dot(*inst.first_stage_costs, x.chosen) + lp.objective;

    CostVector deviation_pattern(static_cast<std::size_t>(n), Rational(0));
    CostVector realized = u.lower;
    for (int i = 0; i < n; ++i) {
        Rational delta = lp.row_duals[static_cast<std::size_t>(first_coupling_row + i)];
        if (delta.is_negative()) delta = Rational(0); // clip dual noise; exact solve gives >= 0
        delta = min(delta, u.deviation[static_cast<std::size_t>(i)]);
        deviation_pattern[static_cast<std::size_t>(i)] = delta;
        realized[static_cast<std::size_t>(i)] += delta;
    }
    if (recoverable) {
        auto [y, q] = recovery_best_response(x, realized, inst.p, inst.kept_min());
        rep.second_stage = y;
    } else {
        auto [y, q] = second_stage_completion(x, realized, inst.p);
        rep.second_stage = y;
    }
    rep.witness_costs = std::move(realized);
    rep.witness_deviation = std::move(deviation_pattern);
    return rep;
}

} // namespace

EvaluationReport evaluate_robust(const SelectionSolution& x, const ProblemInstance& inst) {
    require_valid(inst);
    if (static_cast<int>(x.chosen.size()) != inst.n) throw std::invalid_argument("solution length mismatch");
    const bool partial = inst.criterion == Criterion::TwoStage;
    if (partial) {
        if (x.role != SolutionRole::PartialFirstStage || x.count() > inst.p) {
            throw std::invalid_argument("two-stage evaluation needs a partial first stage of size <= p");
        }
    } else {
        if (x.role != SolutionRole::Full || x.count() != inst.p) {
            throw std::invalid_argument("evaluation needs a full solution of size p");
        }
    }

    const auto& u = inst.uncertainty;
    switch (inst.criterion) {
        case Criterion::MinMax:
            if (u.kind == UncertaintySet::Kind::Discrete) return eval_minmax_discrete(x, u.discrete);
            if (u.kind == UncertaintySet::Kind::Budgeted) return eval_minmax_budgeted(x, u.budgeted);
            {
                // interval: nominal on upper bounds
                EvaluationReport rep;
                CostVector upper = u.interval.lower;
                for (std::size_t i = 0; i < upper.size(); ++i) upper[i] += u.interval.deviation[i];
                rep.objective = dot(upper, x.chosen);
                rep.witness_costs = std::move(upper);
                return rep;
            }
        case Criterion::MinMaxRegret:
            if (u.kind == UncertaintySet::Kind::Discrete) return eval_regret_discrete(x, u.discrete, inst.p);
            return eval_regret_interval(x, u.interval, inst.p);
        case Criterion::TwoStage:
            if (u.kind == UncertaintySet::Kind::Discrete) return eval_two_stage_discrete(x, inst);
            if (u.budgeted.mode == BudgetMode::DiscreteItems) {
                return eval_two_stage_discrete_budgeted(x, inst);
            }
            return eval_variable_budget_second_stage(x, inst);
        case Criterion::Recoverable:
            if (u.kind == UncertaintySet::Kind::Discrete) return eval_recoverable_discrete(x, inst);
            if (u.budgeted.mode == BudgetMode::DiscreteItems) {
                return eval_recoverable_discrete_budgeted(x, inst);
            }
            return eval_variable_budget_second_stage(x, inst);
    }
    throw std::logic_error("unreachable criterion");
}

namespace {

// Largest inner value over all binary deviation patterns with at most gamma
// deviations; used to double-check witnesses on small instances.
Rational delta_enumeration_value(const SelectionSolution& x, const ProblemInstance& inst) {
    const auto& u = inst.uncertainty.budgeted;
    const int n = inst.n;
    const std::int64_t gamma = floor(u.gamma);
    Rational best;
    bool first = true;
    std::vector<int> delta(static_cast<std::size_t>(n), 0);
    // iterate all subsets with popcount <= gamma
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::int64_t>(__builtin_popcount(mask)) > gamma) continue;
        CostVector realized = u.lower;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) realized[static_cast<std::size_t>(i)] += u.deviation[static_cast<std::size_t>(i)];
        }
        Rational inner;
        switch (inst.criterion) {
            case Criterion::MinMax: inner = dot(realized, x.chosen); break;
            case Criterion::TwoStage: {
                auto [y, q] = second_stage_completion(x, realized, inst.p);
                inner = dot(*inst.first_stage_costs, x.chosen) + q;
                break;
            }
            case Criterion::Recoverable: {
                auto [y, q] = recovery_best_response(x, realized, inst.p, inst.kept_min());
                inner = dot(*inst.first_stage_costs, x.chosen) + q;
                break;
            }
            default: throw std::logic_error("delta enumeration on unsupported criterion");
        }
        if (first || best < inner) {
            first = false;
            best = inner;
        }
    }
    return best;
}

template <typename Fn>
void for_each_subset_of_size(int n, int k, Fn&& fn) {
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    if (k == 0) {
        fn(pick);
        return;
    }
    while (true) {
        fn(pick);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace

std::pair<SelectionSolution, Rational> brute_force_robust_opt(const ProblemInstance& inst,
                                                              const BruteForceLimits& limits) {
    require_valid(inst);
    if (inst.n > limits.max_n) {
        throw std::invalid_argument("instance too large for brute force (n=" + std::to_string(inst.n) +
                                    " > " + std::to_string(limits.max_n) + ")");
    }

    const bool partial = inst.criterion == Criterion::TwoStage;
    SelectionSolution best_x;
    Rational best_value;
    bool first = true;

    auto consider = [&](const std::vector<int>& support, SolutionRole role) {
        SelectionSolution x = SelectionSolution::from_support(inst.n, support, role);
        Rational v = evaluate_robust(x, inst).objective;
        if (first || v < best_value ||
            (v == best_value && lex_before(x.chosen, best_x.chosen))) {
            first = false;
            best_value = v;
            best_x = std::move(x);
        }
    };

    if (partial) {
        for (int k = 0; k <= inst.p; ++k) {
            for_each_subset_of_size(inst.n, k, [&](const std::vector<int>& s) {
                consider(s, SolutionRole::PartialFirstStage);
            });
        }
    } else {
        for_each_subset_of_size(inst.n, inst.p, [&](const std::vector<int>& s) {
            consider(s, SolutionRole::Full);
        });
    }

    // double-check the winner's witness against full deviation enumeration
    if (inst.uncertainty.kind == UncertaintySet::Kind::Budgeted &&
        inst.uncertainty.budgeted.mode == BudgetMode::DiscreteItems &&
        inst.n <= limits.delta_enum_max_n && inst.criterion != Criterion::MinMaxRegret) {
        Rational enumerated = delta_enumeration_value(best_x, inst);
        if (enumerated != best_value) {
            throw std::logic_error("budgeted witness mismatch: evaluation " + best_value.str() +
                                   " vs delta enumeration " + enumerated.str());
        }
    }
    return {best_x, best_value};
}

} // namespace robsel
