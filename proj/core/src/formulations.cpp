#include "robsel/formulations.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace robsel {

using milp::MilpModel;
using milp::Relation;
using milp::Sense;
using milp::Term;

namespace {

Rational positive_part(const Rational& r) { return r.is_negative() ? Rational(0) : r; }

std::vector<Rational> sorted_unique(std::vector<Rational> vals) {
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

std::string idx(const std::string& sym, int i) { return sym + "[" + std::to_string(i) + "]"; }
std::string idx2(const std::string& sym, int a, int b) {
    return sym + "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

struct Builder {
    ModelBundle bundle;

    int binary(const std::string& name) {
        bundle.varmap.emplace(name, name);
        return bundle.model.add_binary(name);
    }
    int continuous(const std::string& name, std::optional<Rational> lo, std::optional<Rational> hi) {
        bundle.varmap.emplace(name, name);
        return bundle.model.add_continuous(name, std::move(lo), std::move(hi));
    }
    std::vector<int> selection_vars(int n) {
        std::vector<int> xs(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = binary(idx("x", i));
        bundle.x_vars = xs;
        return xs;
    }
    void cardinality(const std::vector<int>& xs, Relation rel, int p) {
        std::vector<Term> terms;
        for (int v : xs) terms.push_back({v, Rational(1)});
        bundle.model.add_constraint(std::move(terms), rel, Rational(p));
    }
};

ModelBundle build_minmax_discrete(const ProblemInstance& inst) {
    Builder b;
    const auto& scenarios = inst.uncertainty.discrete.scenarios;
    auto xs = b.selection_vars(inst.n);
    int t = b.continuous("t", std::nullopt, std::nullopt);

    // epigraph: t bounds the cost of every scenario
    for (std::size_t j = 0; j < scenarios.size(); ++j) {
        std::vector<Term> row{{t, Rational(1)}};
        for (int i = 0; i < inst.n; ++i) {
            row.push_back({xs[static_cast<std::size_t>(i)], -scenarios[j][static_cast<std::size_t>(i)]});
        }
        b.bundle.model.add_constraint(std::move(row), Relation::GreaterEqual, Rational(0));
    }
    b.cardinality(xs, Relation::Equal, inst.p);
    b.bundle.model.set_objective({{t, Rational(1)}}, Sense::Minimize);
    return std::move(b.bundle);
}

ModelBundle build_minmax_interval(const ProblemInstance& inst) {
    // nominal-equivalent: select on the upper bounds
    Builder b;
    const auto& u = inst.uncertainty.interval;
    auto xs = b.selection_vars(inst.n);
    std::vector<Term> obj;
    for (int i = 0; i < inst.n; ++i) {
        obj.push_back({xs[static_cast<std::size_t>(i)],
                       u.lower[static_cast<std::size_t>(i)] + u.deviation[static_cast<std::size_t>(i)]});
    }
    b.cardinality(xs, Relation::Equal, inst.p);
    b.bundle.model.set_objective(std::move(obj), Sense::Minimize);
    return std::move(b.bundle);
}

ModelBundle build_minmax_budgeted(const ProblemInstance& inst) {
    Builder b;
    const auto& u = inst.uncertainty.budgeted;
    auto xs = b.selection_vars(inst.n);

    if (u.mode == BudgetMode::VariableBudget) {
        // dual of the deviation-mass adversary: pi per unit of budget, rho_i
        // per unit of item capacity
        int pi = b.continuous("pi", Rational(0), std::nullopt);
        std::vector<int> rho(static_cast<std::size_t>(inst.n));
        for (int i = 0; i < inst.n; ++i) {
            rho[static_cast<std::size_t>(i)] = b.continuous(idx("rho", i), Rational(0), std::nullopt);
        }
        std::vector<Term> obj;
        for (int i = 0; i < inst.n; ++i) obj.push_back({xs[static_cast<std::size_t>(i)], u.lower[static_cast<std::size_t>(i)]});
        obj.push_back({pi, u.gamma});
        for (int i = 0; i < inst.n; ++i) obj.push_back({rho[static_cast<std::size_t>(i)], u.deviation[static_cast<std::size_t>(i)]});
        for (int i = 0; i < inst.n; ++i) {
            b.bundle.model.add_constraint(
                {{pi, Rational(1)}, {rho[static_cast<std::size_t>(i)], Rational(1)}, {xs[static_cast<std::size_t>(i)], Rational(-1)}},
                Relation::GreaterEqual, Rational(0));
        }
        b.cardinality(xs, Relation::Equal, inst.p);
        b.bundle.model.set_objective(std::move(obj), Sense::Minimize);
        return std::move(b.bundle);
    }

    // dual of the item-budget adversary; the dual paired with each item is
    // named rho to keep it apart from the uncertainty set's own deltas
    int pi = b.continuous("pi", Rational(0), std::nullopt);
    b.bundle.varmap.emplace("delta", "rho"); // formulation's per-item dual
    std::vector<int> rho(static_cast<std::size_t>(inst.n));
    for (int i = 0; i < inst.n; ++i) {
        rho[static_cast<std::size_t>(i)] = b.continuous(idx("rho", i), Rational(0), std::nullopt);
    }
    std::vector<Term> obj;
    for (int i = 0; i < inst.n; ++i) obj.push_back({xs[static_cast<std::size_t>(i)], u.lower[static_cast<std::size_t>(i)]});
    obj.push_back({pi, u.gamma});
    for (int i = 0; i < inst.n; ++i) obj.push_back({rho[static_cast<std::size_t>(i)], Rational(1)});

    for (int i = 0; i < inst.n; ++i) {
        // pi + rho_i >= d_i x_i
        b.bundle.model.add_constraint(
            {{pi, Rational(1)},
             {rho[static_cast<std::size_t>(i)], Rational(1)},
             {xs[static_cast<std::size_t>(i)], -u.deviation[static_cast<std::size_t>(i)]}},
            Relation::GreaterEqual, Rational(0));
    }
    b.cardinality(xs, Relation::Equal, inst.p);
    b.bundle.model.set_objective(std::move(obj), Sense::Minimize);
    return std::move(b.bundle);
}

ModelBundle build_regret_interval(const ProblemInstance& inst) {
    Builder b;
    const auto& u = inst.uncertainty.interval;
    auto xs = b.selection_vars(inst.n);
    int pi = b.continuous("pi", Rational(0), std::nullopt);
    std::vector<int> rho(static_cast<std::size_t>(inst.n));
    for (int i = 0; i < inst.n; ++i) {
        rho[static_cast<std::size_t>(i)] = b.continuous(idx("rho", i), Rational(0), std::nullopt);
    }

    std::vector<Term> obj;
    for (int i = 0; i < inst.n; ++i) {
        obj.push_back({xs[static_cast<std::size_t>(i)],
                       u.lower[static_cast<std::size_t>(i)] + u.deviation[static_cast<std::size_t>(i)]});
    }
    obj.push_back({pi, Rational(-inst.p)});
    for (int i = 0; i < inst.n; ++i) obj.push_back({rho[static_cast<std::size_t>(i)], Rational(1)});

    for (int i = 0; i < inst.n; ++i) {
        // pi - rho_i <= d_i x_i + lower_i
        b.bundle.model.add_constraint(
            {{pi, Rational(1)},
             {rho[static_cast<std::size_t>(i)], Rational(-1)},
             {xs[static_cast<std::size_t>(i)], -u.deviation[static_cast<std::size_t>(i)]}},
            Relation::LessEqual, u.lower[static_cast<std::size_t>(i)]);
    }
    b.cardinality(xs, Relation::Equal, inst.p);
    b.bundle.model.set_objective(std::move(obj), Sense::Minimize);
    return std::move(b.bundle);
}

ModelBundle build_regret_discrete(const ProblemInstance& inst) {
    Builder b;
    const auto& scenarios = inst.uncertainty.discrete.scenarios;
    auto opts = scenario_optima(scenarios, inst.p);
    auto xs = b.selection_vars(inst.n);
    int t = b.continuous("t", std::nullopt, std::nullopt);

    for (std::size_t j = 0; j < scenarios.size(); ++j) {
        // t >= c^j x - opt(c^j)
        std::vector<Term> row{{t, Rational(1)}};
        for (int i = 0; i < inst.n; ++i) {
            row.push_back({xs[static_cast<std::size_t>(i)], -scenarios[j][static_cast<std::size_t>(i)]});
        }
        b.bundle.model.add_constraint(std::move(row), Relation::GreaterEqual, -opts[j]);
    }
    b.cardinality(xs, Relation::Equal, inst.p);
    b.bundle.model.set_objective({{t, Rational(1)}}, Sense::Minimize);
    return std::move(b.bundle);
}

ModelBundle build_two_stage_discrete(const ProblemInstance& inst) {
    Builder b;
    const auto& scenarios = inst.uncertainty.discrete.scenarios;
    const int N = static_cast<int>(scenarios.size());
    auto xs = b.selection_vars(inst.n);
    std::vector<std::vector<int>> ys(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) {
        for (int i = 0; i < inst.n; ++i) {
            ys[static_cast<std::size_t>(j)].push_back(b.binary(idx2("y", j, i)));
        }
    }
    int t = b.continuous("t", std::nullopt, std::nullopt);

    for (int j = 0; j < N; ++j) {
        // t >= c^j y^j
        std::vector<Term> row{{t, Rational(1)}};
        for (int i = 0; i < inst.n; ++i) {
            row.push_back({ys[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)],
                           -scenarios[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]});
        }
        b.bundle.model.add_constraint(std::move(row), Relation::GreaterEqual, Rational(0));

        // sum_i (x_i + y^j_i) = p
        std::vector<Term> card;
        for (int i = 0; i < inst.n; ++i) {
            card.push_back({xs[static_cast<std::size_t>(i)], Rational(1)});
            card.push_back({ys[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)], Rational(1)});
        }
        b.bundle.model.add_constraint(std::move(card), Relation::Equal, Rational(inst.p));

        for (int i = 0; i < inst.n; ++i) {
            b.bundle.model.add_constraint({{xs[static_cast<std::size_t>(i)], Rational(1)},
                                           {ys[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)], Rational(1)}},
                                          Relation::LessEqual, Rational(1));
        }
    }

    std::vector<Term> obj{{t, Rational(1)}};
    for (int i = 0; i < inst.n; ++i) {
        obj.push_back({xs[static_cast<std::size_t>(i)], (*inst.first_stage_costs)[static_cast<std::size_t>(i)]});
    }
    b.bundle.model.set_objective(std::move(obj), Sense::Minimize);
    b.bundle.role = SolutionRole::PartialFirstStage;
    return std::move(b.bundle);
}

ModelBundle build_two_stage_discrete_budgeted(const ProblemInstance& inst) {
    Builder b;
    const auto& u = inst.uncertainty.budgeted;
    const auto& C = *inst.first_stage_costs;
    auto S = completion_threshold_set(u.lower, u.deviation);
    const int K = S.size();

    auto xs = b.selection_vars(inst.n);
    int t = b.continuous("t", std::nullopt, std::nullopt);
    std::vector<int> pis(static_cast<std::size_t>(K));
    std::vector<std::vector<int>> rhos(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
        pis[static_cast<std::size_t>(k)] = b.continuous(idx("pi", k), Rational(0), std::nullopt);
        for (int i = 0; i < inst.n; ++i) {
            rhos[static_cast<std::size_t>(k)].push_back(b.continuous(idx2("rho", k, i), Rational(0), std::nullopt));
        }
    }

    for (int k = 0; k < K; ++k) {
        const Rational& alpha = S.values[static_cast<std::size_t>(k)];
        // t >= C x + (p - sum x) alpha - sum_i (1 - x_i)[alpha - lower_i]_+
        //      + Gamma pi^k + sum_i rho^k_i
        std::vector<Term> row{{t, Rational(1)}, {pis[static_cast<std::size_t>(k)], -u.gamma}};
        Rational rhs = Rational(inst.p) * alpha;
        for (int i = 0; i < inst.n; ++i) {
            const Rational plus_lo = positive_part(alpha - u.lower[static_cast<std::size_t>(i)]);
            rhs -= plus_lo;
            // coefficient of x_i: -(C_i - alpha + [alpha - lower_i]_+)
            Rational coef = C[static_cast<std::size_t>(i)] - alpha + plus_lo;
            row.push_back({xs[static_cast<std::size_t>(i)], -coef});
            row.push_back({rhos[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)], Rational(-1)});
        }
        b.bundle.model.add_constraint(std::move(row), Relation::GreaterEqual, rhs);

        for (int i = 0; i < inst.n; ++i) {
            // pi^k + rho^k_i >= (1 - x_i) * gain_ik
            const Rational plus_lo = positive_part(alpha - u.lower[static_cast<std::size_t>(i)]);
            const Rational plus_hi = positive_part(alpha - u.lower[static_cast<std::size_t>(i)] -
                                                   u.deviation[static_cast<std::size_t>(i)]);
            const Rational gain = plus_lo - plus_hi;
            b.bundle.model.add_constraint({{pis[static_cast<std::size_t>(k)], Rational(1)},
                                           {rhos[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)], Rational(1)},
                                           {xs[static_cast<std::size_t>(i)], gain}},
                                          Relation::GreaterEqual, gain);
        }
    }
    b.cardinality(xs, Relation::LessEqual, inst.p);
    b.bundle.model.set_objective({{t, Rational(1)}}, Sense::Minimize);
    b.bundle.role = SolutionRole::PartialFirstStage;
    return std::move(b.bundle);
}

ModelBundle build_two_stage_continuous_budgeted(const ProblemInstance& inst) {
    Builder b;
    const auto& u = inst.uncertainty.budgeted;
    const auto& C = *inst.first_stage_costs;
    auto xs = b.selection_vars(inst.n);
    std::vector<int> ys(static_cast<std::size_t>(inst.n));
    for (int i = 0; i < inst.n; ++i) {
        ys[static_cast<std::size_t>(i)] = b.continuous(idx("y", i), Rational(0), Rational(1));
    }
    int pi = b.continuous("pi", Rational(0), std::nullopt);
    std::vector<int> rho(static_cast<std::size_t>(inst.n));
    for (int i = 0; i < inst.n; ++i) {
        rho[static_cast<std::size_t>(i)] = b.continuous(idx("rho", i), Rational(0), std::nullopt);
    }

    std::vector<Term> card;
    for (int i = 0; i < inst.n; ++i) {
        card.push_back({xs[static_cast<std::size_t>(i)], Rational(1)});
        card.push_back({ys[static_cast<std::size_t>(i)], Rational(1)});
    }
    b.bundle.model.add_constraint(std::move(card), Relation::Equal, Rational(inst.p));
    for (int i = 0; i < inst.n; ++i) {
        b.bundle.model.add_constraint(
            {{xs[static_cast<std::size_t>(i)], Rational(1)}, {ys[static_cast<std::size_t>(i)], Rational(1)}},
            Relation::LessEqual, Rational(1));
        b.bundle.model.add_constraint(
            {{pi, Rational(1)}, {rho[static_cast<std::size_t>(i)], Rational(1)}, {ys[static_cast<std::size_t>(i)], Rational(-1)}},
            Relation::GreaterEqual, Rational(0));
    }

    std::vector<Term> obj;
    for (int i = 0; i < inst.n; ++i) {
        obj.push_back({xs[static_cast<std::size_t>(i)], C[static_cast<std::size_t>(i)]});
        obj.push_back({ys[static_cast<std::size_t>(i)], u.lower[static_cast<std::size_t>(i)]});
        obj.push_back({rho[static_cast<std::size_t>(i)], u.deviation[static_cast<std::size_t>(i)]});
    }
    obj.push_back({pi, u.gamma});
    b.bundle.model.set_objective(std::move(obj), Sense::Minimize);
    b.bundle.role = SolutionRole::PartialFirstStage;
    return std::move(b.bundle);
}

ModelBundle build_recoverable_discrete(const ProblemInstance& inst) {
    Builder b;
    const auto& scenarios = inst.uncertainty.discrete.scenarios;
    const int N = static_cast<int>(scenarios.size());
    const auto& C = *inst.first_stage_costs;
    auto xs = b.selection_vars(inst.n);
    std::vector<std::vector<int>> ys(static_cast<std::size_t>(N)), zs(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) {
        for (int i = 0; i < inst.n; ++i) {
            ys[static_cast<std::size_t>(j)].push_back(b.binary(idx2("y", j, i)));
        }
        for (int i = 0; i < inst.n; ++i) {
            zs[static_cast<std::size_t>(j)].push_back(b.binary(idx2("z", j, i)));
        }
    }
    int t = b.continuous("t", std::nullopt, std::nullopt);

    b.cardinality(xs, Relation::Equal, inst.p);
    for (int j = 0; j < N; ++j) {
        std::vector<Term> row{{t, Rational(1)}};
        for (int i = 0; i < inst.n; ++i) {
            row.push_back({ys[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)],
                           -scenarios[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]});
        }
        b.bundle.model.add_constraint(std::move(row), Relation::GreaterEqual, Rational(0));

        std::vector<Term> ycard;
        for (int i = 0; i < inst.n; ++i) {
            ycard.push_back({ys[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)], Rational(1)});
        }
        b.bundle.model.add_constraint(std::move(ycard), Relation::Equal, Rational(inst.p));

        std::vector<Term> zcard;
        for (int i = 0; i < inst.n; ++i) {
            int z = zs[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            b.bundle.model.add_constraint({{z, Rational(1)}, {xs[static_cast<std::size_t>(i)], Rational(-1)}},
                                          Relation::LessEqual, Rational(0));
            b.bundle.model.add_constraint({{z, Rational(1)},
                                           {ys[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)], Rational(-1)}},
                                          Relation::LessEqual, Rational(0));
            zcard.push_back({z, Rational(1)});
        }
        // overlap between x and y^j, at least kept_min items stay
        b.bundle.model.add_constraint(std::move(zcard), Relation::GreaterEqual, Rational(inst.kept_min()));
    }

    std::vector<Term> obj{{t, Rational(1)}};
    for (int i = 0; i < inst.n; ++i) obj.push_back({xs[static_cast<std::size_t>(i)], C[static_cast<std::size_t>(i)]});
    b.bundle.model.set_objective(std::move(obj), Sense::Minimize);
    return std::move(b.bundle);
}

ModelBundle build_recoverable_discrete_budgeted(const ProblemInstance& inst) {
    if (inst.n > 40) {
        throw std::invalid_argument("recoverable discrete-budgeted model limited to n <= 40 "
                                    "(threshold pair set grows quadratically)");
    }
    Builder b;
    const auto& u = inst.uncertainty.budgeted;
    const auto& C = *inst.first_stage_costs;
    auto S = recovery_pair_set(u.lower, u.deviation);
    const int K = S.size();
    const Rational kept = Rational(inst.kept_min());

    auto xs = b.selection_vars(inst.n);
    int t = b.continuous("t", std::nullopt, std::nullopt);
    std::vector<int> pis(static_cast<std::size_t>(K));
    std::vector<std::vector<int>> rhos(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
        pis[static_cast<std::size_t>(k)] = b.continuous(idx("pi", k), Rational(0), std::nullopt);
        for (int i = 0; i < inst.n; ++i) {
            rhos[static_cast<std::size_t>(k)].push_back(b.continuous(idx2("rho", k, i), Rational(0), std::nullopt));
        }
    }

    for (int k = 0; k < K; ++k) {
        const auto& [alpha, beta] = S.values[static_cast<std::size_t>(k)];
        // level terms [alpha + x_i beta - lower_i]_+ split by the binary x_i
        std::vector<Term> row{{t, Rational(1)}, {pis[static_cast<std::size_t>(k)], -u.gamma}};
        Rational rhs = Rational(inst.p) * alpha + kept * beta;
        for (int i = 0; i < inst.n; ++i) {
            const Rational& lo = u.lower[static_cast<std::size_t>(i)];
            const Rational at0 = positive_part(alpha - lo);
            const Rational at1 = positive_part(alpha + beta - lo);
            rhs -= at0;
            // x-coefficient: -(C_i - (at1 - at0))
            Rational coef = C[static_cast<std::size_t>(i)] - (at1 - at0);
            row.push_back({xs[static_cast<std::size_t>(i)], -coef});
            row.push_back({rhos[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)], Rational(-1)});
        }
        b.bundle.model.add_constraint(std::move(row), Relation::GreaterEqual, rhs);

        for (int i = 0; i < inst.n; ++i) {
            const Rational& lo = u.lower[static_cast<std::size_t>(i)];
            const Rational& d = u.deviation[static_cast<std::size_t>(i)];
            const Rational gain0 = positive_part(alpha - lo) - positive_part(alpha - lo - d);
            const Rational gain1 = positive_part(alpha + beta - lo) - positive_part(alpha + beta - lo - d);
            // pi^k + rho^k_i >= gain0 + (gain1 - gain0) x_i
            b.bundle.model.add_constraint({{pis[static_cast<std::size_t>(k)], Rational(1)},
                                           {rhos[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)], Rational(1)},
                                           {xs[static_cast<std::size_t>(i)], gain0 - gain1}},
                                          Relation::GreaterEqual, gain0);
        }
    }
    b.cardinality(xs, Relation::Equal, inst.p);

    std::vector<Term> obj{{t, Rational(1)}};
    b.bundle.model.set_objective(std::move(obj), Sense::Minimize);
    return std::move(b.bundle);
}

ModelBundle build_recoverable_continuous_budgeted(const ProblemInstance& inst) {
    Builder b;
    const auto& u = inst.uncertainty.budgeted;
    const auto& C = *inst.first_stage_costs;
    auto xs = b.selection_vars(inst.n);
    std::vector<int> ys(static_cast<std::size_t>(inst.n)), zs(static_cast<std::size_t>(inst.n));
    for (int i = 0; i < inst.n; ++i) {
        ys[static_cast<std::size_t>(i)] = b.continuous(idx("y", i), Rational(0), Rational(1));
    }
    for (int i = 0; i < inst.n; ++i) {
        zs[static_cast<std::size_t>(i)] = b.continuous(idx("z", i), Rational(0), Rational(1));
    }
    int pi = b.continuous("pi", Rational(0), std::nullopt);
    std::vector<int> rho(static_cast<std::size_t>(inst.n));
    for (int i = 0; i < inst.n; ++i) {
        rho[static_cast<std::size_t>(i)] = b.continuous(idx("rho", i), Rational(0), std::nullopt);
    }

    std::vector<Term> ycard, xcard, zcard;
    for (int i = 0; i < inst.n; ++i) {
        ycard.push_back({ys[static_cast<std::size_t>(i)], Rational(1)});
        xcard.push_back({xs[static_cast<std::size_t>(i)], Rational(1)});
        zcard.push_back({zs[static_cast<std::size_t>(i)], Rational(1)});
    }
    b.bundle.model.add_constraint(std::move(ycard), Relation::Equal, Rational(inst.p));
    b.bundle.model.add_constraint(std::move(xcard), Relation::Equal, Rational(inst.p));
    b.bundle.model.add_constraint(std::move(zcard), Relation::GreaterEqual, Rational(inst.kept_min()));
    for (int i = 0; i < inst.n; ++i) {
        b.bundle.model.add_constraint(
            {{zs[static_cast<std::size_t>(i)], Rational(1)}, {xs[static_cast<std::size_t>(i)], Rational(-1)}},
            Relation::LessEqual, Rational(0));
        b.bundle.model.add_constraint(
            {{zs[static_cast<std::size_t>(i)], Rational(1)}, {ys[static_cast<std::size_t>(i)], Rational(-1)}},
            Relation::LessEqual, Rational(0));
        b.bundle.model.add_constraint(
            {{pi, Rational(1)}, {rho[static_cast<std::size_t>(i)], Rational(1)}, {ys[static_cast<std::size_t>(i)], Rational(-1)}},
            Relation::GreaterEqual, Rational(0));
    }

    std::vector<Term> obj;
    for (int i = 0; i < inst.n; ++i) {
        obj.push_back({xs[static_cast<std::size_t>(i)], C[static_cast<std::size_t>(i)]});
        obj.push_back({ys[static_cast<std::size_t>(i)], u.lower[static_cast<std::size_t>(i)]});
        obj.push_back({rho[static_cast<std::size_t>(i)], u.deviation[static_cast<std::size_t>(i)]});
    }
    obj.push_back({pi, u.gamma});
    b.bundle.model.set_objective(std::move(obj), Sense::Minimize);
    return std::move(b.bundle);
}

} // namespace

BreakpointSet minmax_budgeted_breakpoints(const CostVector& deviation) {
    std::vector<Rational> vals{Rational(0)};
    for (const auto& d : deviation) vals.push_back(d);
    return BreakpointSet{sorted_unique(std::move(vals))};
}

BreakpointSet regret_interval_breakpoints(const CostVector& lower, const CostVector& deviation) {
    std::vector<Rational> vals{Rational(0)};
    for (std::size_t i = 0; i < lower.size(); ++i) {
        vals.push_back(lower[i]);
        vals.push_back(deviation[i]);
        vals.push_back(lower[i] + deviation[i]);
    }
    return BreakpointSet{sorted_unique(std::move(vals))};
}

BreakpointSet completion_threshold_set(const CostVector& lower, const CostVector& deviation) {
    std::vector<Rational> vals{Rational(0)};
    for (std::size_t i = 0; i < lower.size(); ++i) {
        vals.push_back(lower[i]);
        vals.push_back(lower[i] + deviation[i]);
    }
    return BreakpointSet{sorted_unique(std::move(vals))};
}

BreakpointPairSet recovery_pair_set(const CostVector& lower, const CostVector& deviation) {
    std::vector<Rational> alphas{Rational(0)};
    for (std::size_t i = 0; i < lower.size(); ++i) {
        alphas.push_back(lower[i]);
        alphas.push_back(lower[i] + deviation[i]);
    }
    alphas = sorted_unique(std::move(alphas));

    BreakpointPairSet out;
    for (const auto& alpha : alphas) {
        std::vector<Rational> betas{Rational(0)};
        for (std::size_t j = 0; j < lower.size(); ++j) {
            betas.push_back(positive_part(lower[j] - alpha));
            betas.push_back(positive_part(lower[j] - deviation[j] - alpha));
            betas.push_back(positive_part(lower[j] + deviation[j] - alpha));
        }
        for (const auto& beta : sorted_unique(std::move(betas))) {
            out.values.emplace_back(alpha, beta);
        }
    }
    std::sort(out.values.begin(), out.values.end());
    out.values.erase(std::unique(out.values.begin(), out.values.end()), out.values.end());
    return out;
}

std::vector<Rational> scenario_optima(const std::vector<CostVector>& scenarios, int p) {
    std::vector<Rational> out;
    out.reserve(scenarios.size());
    for (const auto& c : scenarios) out.push_back(solve_nominal_selection(c, p).second);
    return out;
}

ModelBundle build_milp(const ProblemInstance& inst) {
    require_valid(inst);
    const auto kind = inst.uncertainty.kind;
    switch (inst.criterion) {
        case Criterion::MinMax:
            if (kind == UncertaintySet::Kind::Discrete) return build_minmax_discrete(inst);
            if (kind == UncertaintySet::Kind::Interval) return build_minmax_interval(inst);
            return build_minmax_budgeted(inst);
        case Criterion::MinMaxRegret:
            if (kind == UncertaintySet::Kind::Discrete) return build_regret_discrete(inst);
            return build_regret_interval(inst);
        case Criterion::TwoStage:
            if (kind == UncertaintySet::Kind::Discrete) return build_two_stage_discrete(inst);
            if (inst.uncertainty.budgeted.mode == BudgetMode::DiscreteItems) {
                return build_two_stage_discrete_budgeted(inst);
            }
            return build_two_stage_continuous_budgeted(inst);
        case Criterion::Recoverable:
            if (kind == UncertaintySet::Kind::Discrete) return build_recoverable_discrete(inst);
            if (inst.uncertainty.budgeted.mode == BudgetMode::DiscreteItems) {
                return build_recoverable_discrete_budgeted(inst);
            }
            return build_recoverable_continuous_budgeted(inst);
    }
    throw std::logic_error("unreachable pairing");
}

SelectionSolution extract_solution(const ModelBundle& bundle, const milp::SolveResult& result,
                                   double integrality_tol) {
    if (!result.has_solution()) throw std::invalid_argument("no solution to extract");
    SelectionSolution sol;
    sol.role = bundle.role;
    sol.chosen.resize(bundle.x_vars.size());
    for (std::size_t i = 0; i < bundle.x_vars.size(); ++i) {
        double v = result.values[static_cast<std::size_t>(bundle.x_vars[i])];
        if (v > 1.0 + integrality_tol || v < -integrality_tol ||
            (v > integrality_tol && v < 1.0 - integrality_tol)) {
            throw std::runtime_error("selection variable not integral: " + std::to_string(v));
        }
        sol.chosen[i] = v > 0.5 ? 1 : 0;
    }
    return sol;
}

std::pair<SelectionSolution, Rational> solve_minmax_budgeted_enumeration(const ProblemInstance& inst) {
    require_valid(inst);
    if (inst.criterion != Criterion::MinMax || inst.uncertainty.kind != UncertaintySet::Kind::Budgeted ||
        inst.uncertainty.budgeted.mode == BudgetMode::VariableBudget) {
        throw std::invalid_argument("breakpoint enumeration needs a min-max item-budget instance");
    }
    const auto& u = inst.uncertainty.budgeted;
    auto P = minmax_budgeted_breakpoints(u.deviation);

    bool first = true;
    SelectionSolution best_x;
    Rational best_value;
    for (const auto& pi : P.values) {
        CostVector adjusted = u.lower;
        for (std::size_t i = 0; i < adjusted.size(); ++i) {
            adjusted[i] += positive_part(u.deviation[i] - pi);
        }
        auto [x, nominal] = solve_nominal_selection(adjusted, inst.p);
        Rational value = u.gamma * pi + nominal;
        if (first || value < best_value ||
            (value == best_value && lex_before(x.chosen, best_x.chosen))) {
            first = false;
            best_value = value;
            best_x = std::move(x);
        }
    }
    return {best_x, best_value};
}

std::pair<SelectionSolution, Rational> solve_regret_interval_enumeration(const ProblemInstance& inst) {
    require_valid(inst);
    if (inst.criterion != Criterion::MinMaxRegret ||
        inst.uncertainty.kind != UncertaintySet::Kind::Interval) {
        throw std::invalid_argument("breakpoint enumeration needs a regret-interval instance");
    }
    const auto& u = inst.uncertainty.interval;
    const int n = inst.n;
    auto P = regret_interval_breakpoints(u.lower, u.deviation);

    bool first = true;
    SelectionSolution best_x;
    Rational best_value;
    for (const auto& pi : P.values) {
        // fixed-threshold reduction: per-item coefficient plus a constant
        CostVector coef(static_cast<std::size_t>(n));
        Rational constant = Rational(-inst.p) * pi;
        for (int i = 0; i < n; ++i) {
            const Rational& lo = u.lower[static_cast<std::size_t>(i)];
            const Rational& d = u.deviation[static_cast<std::size_t>(i)];
            coef[static_cast<std::size_t>(i)] =
                lo + d + positive_part(pi - lo - d) - positive_part(pi - lo);
            constant += positive_part(pi - lo);
        }
        // coefficients are non-negative, so exactly p smallest are selected
        auto [x, nominal] = solve_nominal_selection(coef, inst.p);
        Rational value = nominal + constant;
        if (first || value < best_value ||
            (value == best_value && lex_before(x.chosen, best_x.chosen))) {
            first = false;
            best_value = value;
            best_x = std::move(x);
        }
    }
    return {best_x, best_value};
}

RobustSolveOutcome solve_robust(const ProblemInstance& inst, const milp::SolverConfig& cfg) {
    RobustSolveOutcome out;
    auto bundle = build_milp(inst);
    out.raw = milp::solve_milp(bundle.model, cfg);
    out.status = out.raw.status;
    if (out.raw.has_solution()) {
        out.solution = extract_solution(bundle, out.raw, cfg.integrality_tol);
        out.value = evaluate_robust(out.solution, inst).objective;
    }
    return out;
}

} // namespace robsel
