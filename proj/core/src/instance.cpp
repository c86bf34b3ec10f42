#include "robsel/instance.hpp"

#include <algorithm>
#include <stdexcept>

namespace robsel {

Rational sum(const CostVector& v) {
    Rational s;
    for (const auto& x : v) s += x;
    return s;
}

Rational dot(const CostVector& costs, const std::vector<int>& chosen01) {
    Rational s;
    for (std::size_t i = 0; i < costs.size(); ++i) {
        if (chosen01[i]) s += costs[i];
    }
    return s;
}

const char* to_string(Criterion c) {
    switch (c) {
        case Criterion::MinMax: return "min_max";
        case Criterion::MinMaxRegret: return "min_max_regret";
        case Criterion::TwoStage: return "two_stage";
        case Criterion::Recoverable: return "recoverable";
    }
    return "?";
}

const char* to_string(BudgetMode m) {
    switch (m) {
        case BudgetMode::ContinuousItems: return "continuous_items";
        case BudgetMode::DiscreteItems: return "discrete_items";
        case BudgetMode::VariableBudget: return "variable_budget";
    }
    return "?";
}

const char* to_string(DeltaSemantics s) {
    switch (s) {
        case DeltaSemantics::KeptAtLeast: return "kept_at_least";
        case DeltaSemantics::ChangedAtMost: return "changed_at_most";
    }
    return "?";
}

UncertaintySet UncertaintySet::make_discrete(std::vector<CostVector> scenarios) {
    UncertaintySet u;
    u.kind = Kind::Discrete;
    u.discrete.scenarios = std::move(scenarios);
    return u;
}

UncertaintySet UncertaintySet::make_interval(CostVector lower, CostVector deviation) {
    UncertaintySet u;
    u.kind = Kind::Interval;
    u.interval.lower = std::move(lower);
    u.interval.deviation = std::move(deviation);
    return u;
}

UncertaintySet UncertaintySet::make_budgeted(CostVector lower, CostVector deviation, Rational gamma,
                                             BudgetMode mode) {
    UncertaintySet u;
    u.kind = Kind::Budgeted;
    u.budgeted.lower = std::move(lower);
    u.budgeted.deviation = std::move(deviation);
    u.budgeted.gamma = gamma;
    u.budgeted.mode = mode;
    return u;
}

int UncertaintySet::dimension() const {
    switch (kind) {
        case Kind::Discrete:
            return discrete.scenarios.empty() ? 0 : static_cast<int>(discrete.scenarios[0].size());
        case Kind::Interval: return static_cast<int>(interval.lower.size());
        case Kind::Budgeted: return static_cast<int>(budgeted.lower.size());
    }
    return 0;
}

std::int64_t ProblemInstance::kept_min() const {
    if (!delta.has_value()) throw std::logic_error("kept_min on instance without delta");
    return delta_semantics == DeltaSemantics::KeptAtLeast ? *delta : p - *delta;
}

bool pairing_supported(const ProblemInstance& inst) {
    const auto kind = inst.uncertainty.kind;
    switch (inst.criterion) {
        case Criterion::MinMax:
            return kind == UncertaintySet::Kind::Discrete || kind == UncertaintySet::Kind::Budgeted ||
                   kind == UncertaintySet::Kind::Interval; // interval: nominal-equivalent
        case Criterion::MinMaxRegret:
            return kind == UncertaintySet::Kind::Discrete || kind == UncertaintySet::Kind::Interval;
        case Criterion::TwoStage:
        case Criterion::Recoverable:
            if (kind == UncertaintySet::Kind::Discrete) return true;
            if (kind != UncertaintySet::Kind::Budgeted) return false;
            return inst.uncertainty.budgeted.mode == BudgetMode::DiscreteItems ||
                   inst.uncertainty.budgeted.mode == BudgetMode::VariableBudget;
    }
    return false;
}

std::vector<std::string> validate_instance(const ProblemInstance& inst) {
    std::vector<std::string> defects;
    auto bad = [&](std::string msg) { defects.push_back(std::move(msg)); };

    if (inst.n <= 0) bad("n must be positive");
    if (inst.p < 1 || inst.p > inst.n) bad("p out of range [1, n]");

    auto check_vec = [&](const CostVector& v, const std::string& name) {
        if (static_cast<int>(v.size()) != inst.n) bad(name + " has length != n");
        for (const auto& x : v) {
            if (x.is_negative()) {
                bad(name + " contains a negative entry");
                break;
            }
        }
    };

    const auto& u = inst.uncertainty;
    switch (u.kind) {
        case UncertaintySet::Kind::Discrete: {
            if (u.discrete.scenarios.empty()) bad("discrete set needs at least one scenario");
            for (std::size_t j = 0; j < u.discrete.scenarios.size(); ++j) {
                check_vec(u.discrete.scenarios[j], "scenario " + std::to_string(j + 1));
            }
            break;
        }
        case UncertaintySet::Kind::Interval: {
            check_vec(u.interval.lower, "lower");
            check_vec(u.interval.deviation, "deviation");
            break;
        }
        case UncertaintySet::Kind::Budgeted: {
            check_vec(u.budgeted.lower, "lower");
            check_vec(u.budgeted.deviation, "deviation");
            if (u.budgeted.gamma.is_negative()) bad("gamma must be non-negative");
            if (u.budgeted.mode != BudgetMode::VariableBudget && u.budgeted.gamma > Rational(inst.n)) {
                bad("gamma exceeds n");
            }
            if (u.budgeted.mode == BudgetMode::DiscreteItems && !u.budgeted.gamma.is_integer()) {
                bad("discrete-items budget requires integral gamma");
            }
            break;
        }
    }

    const bool needs_first_stage = inst.is_two_stage_like();
    if (needs_first_stage != inst.first_stage_costs.has_value()) {
        bad(needs_first_stage ? "first-stage costs missing" : "first-stage costs not allowed");
    }
    if (inst.first_stage_costs) check_vec(*inst.first_stage_costs, "first-stage costs");

    if (inst.criterion == Criterion::Recoverable) {
        if (!inst.delta.has_value()) {
            bad("recoverable instance needs delta");
        } else if (*inst.delta < 0 || *inst.delta > inst.p) {
            bad("delta out of range [0, p]");
        }
    } else if (inst.delta.has_value()) {
        bad("delta only valid for recoverable instances");
    }

    if (!pairing_supported(inst)) bad("criterion/uncertainty pairing not supported");
    return defects;
}

void require_valid(const ProblemInstance& inst) {
    auto defects = validate_instance(inst);
    if (!defects.empty()) {
        std::string msg = "invalid instance:";
        for (const auto& d : defects) msg += " " + d + ";";
        throw std::invalid_argument(msg);
    }
}

int SelectionSolution::count() const {
    int c = 0;
    for (int v : chosen) c += v;
    return c;
}

std::vector<int> SelectionSolution::support() const {
    std::vector<int> items;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        if (chosen[i]) items.push_back(static_cast<int>(i));
    }
    return items;
}

SelectionSolution SelectionSolution::from_support(int n, const std::vector<int>& items,
                                                  SolutionRole role) {
    SelectionSolution s;
    s.chosen.assign(n, 0);
    s.role = role;
    for (int i : items) s.chosen.at(static_cast<std::size_t>(i)) = 1;
    return s;
}

bool operator==(const SelectionSolution& a, const SelectionSolution& b) {
    return a.role == b.role && a.chosen == b.chosen;
}

bool lex_before(const std::vector<int>& a, const std::vector<int>& b) {
    // compare sorted index lists; a strict prefix counts as smaller
    std::vector<int> sa, sb;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i]) sa.push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i]) sb.push_back(static_cast<int>(i));
    return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
}

} // namespace robsel
