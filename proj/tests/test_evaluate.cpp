#include <doctest.h>

#include "robsel/evaluate.hpp"
#include "robsel/rng.hpp"
#include "support/builders.hpp"

using namespace robsel;
using test::costs;
using test::full;
using test::partial;

TEST_CASE("min-max discrete evaluation") {
    auto inst = test::minmax_discrete(2, {{1, 5, 3, 4}, {4, 2, 5, 1}});
    auto rep = evaluate_robust(full(4, {0, 3}), inst);
    CHECK(rep.objective == Rational(5));
    CHECK(*rep.witness_scenario == 0); // tie between scenarios resolved to the first
}

TEST_CASE("min-max interval equals nominal on upper bounds") {
    ProblemInstance inst;
    inst.n = 3;
    inst.p = 2;
    inst.criterion = Criterion::MinMax;
    inst.uncertainty = UncertaintySet::make_interval(costs({1, 2, 3}), costs({4, 0, 1}));
    auto rep = evaluate_robust(full(3, {0, 2}), inst);
    CHECK(rep.objective == Rational(5 + 4));
}

TEST_CASE("min-max regret discrete evaluation") {
    auto inst = test::regret_discrete(2, {{1, 5, 3, 4}, {4, 2, 5, 1}});
    auto rep = evaluate_robust(full(4, {0, 3}), inst);
    CHECK(rep.objective == Rational(2)); // opt(c1)=4, opt(c2)=3
    CHECK(*rep.witness_scenario == 1);
}

TEST_CASE("min-max regret interval evaluation reproduces its witness") {
    auto inst = test::regret_interval(1, {1, 2, 0}, {1, 0, 5});
    auto x = full(3, {0});
    auto rep = evaluate_robust(x, inst);
    CHECK(rep.objective == Rational(2));
    REQUIRE(rep.witness_costs.has_value());
    // re-evaluating the witness reproduces the objective exactly
    auto [yopt, opt] = solve_nominal_selection(*rep.witness_costs, inst.p);
    CHECK(dot(*rep.witness_costs, x.chosen) - opt == rep.objective);
}

TEST_CASE("min-max budgeted evaluation: continuous items") {
    auto inst = test::minmax_budgeted(2, {1, 1, 1}, {2, 3, 4}, Rational(1));
    auto rep = evaluate_robust(full(3, {0, 1}), inst);
    CHECK(rep.objective == Rational(5)); // 2 + top-1 of {2,3}
    SUBCASE("fractional budget tops up") {
        inst.uncertainty.budgeted.gamma = Rational(3, 2);
        auto rep2 = evaluate_robust(full(3, {0, 1}), inst);
        CHECK(rep2.objective == Rational(2) + Rational(3) + Rational(1, 2) * Rational(2));
    }
    SUBCASE("monotone in gamma") {
        Rational prev(-1);
        for (int g = 0; g <= 3; ++g) {
            inst.uncertainty.budgeted.gamma = Rational(g);
            auto v = evaluate_robust(full(3, {0, 1}), inst).objective;
            CHECK(v >= prev);
            prev = v;
        }
    }
}

TEST_CASE("min-max budgeted evaluation: variable budget caps total mass") {
    auto inst = test::minmax_budgeted(2, {1, 1, 1}, {2, 3, 4}, Rational(1), BudgetMode::VariableBudget);
    auto rep = evaluate_robust(full(3, {0, 1}), inst);
    CHECK(rep.objective == Rational(3)); // lower 2 + min(1, 5)
    inst.uncertainty.budgeted.gamma = Rational(50);
    CHECK(evaluate_robust(full(3, {0, 1}), inst).objective == Rational(7)); // all deviation mass
}

TEST_CASE("two-stage discrete evaluation") {
    auto inst = test::two_stage_discrete(2, {2, 10, 10}, {{9, 1, 8}, {9, 8, 1}});
    auto rep = evaluate_robust(partial(3, {0}), inst);
    CHECK(rep.objective == Rational(3)); // 2 + worst completion 1
}

TEST_CASE("recoverable discrete evaluation honors both delta readings") {
    auto inst = test::recoverable_discrete(2, {1, 1, 1, 1}, {{10, 9, 1, 2}}, 1,
                                           DeltaSemantics::KeptAtLeast);
    // kept_min = 1: frozen from the recovery sweep example
    auto rep = evaluate_robust(full(4, {0, 1}), inst);
    CHECK(rep.objective == Rational(2 + 10));
    inst.delta_semantics = DeltaSemantics::ChangedAtMost; // kept_min = p - 1 = 1, same here
    CHECK(evaluate_robust(full(4, {0, 1}), inst).objective == Rational(12));
    inst.delta = 0;
    // changed-at-most 0 forces y = x
    CHECK(evaluate_robust(full(4, {0, 1}), inst).objective == Rational(2 + 19));
}

TEST_CASE("witness reproduction for budgeted two-stage evaluation") {
    auto rng = substream(42, 0);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 4 + static_cast<int>(rng.uniform_int(0, 3));
        const int p = 2 + static_cast<int>(rng.uniform_int(0, 1));
        CostVector C, lo, d;
        for (int i = 0; i < n; ++i) {
            C.push_back(Rational(rng.uniform_int(1, 30)));
            lo.push_back(Rational(rng.uniform_int(1, 30)));
            d.push_back(Rational(rng.uniform_int(0, 30)));
        }
        for (auto mode : {BudgetMode::DiscreteItems, BudgetMode::VariableBudget}) {
            ProblemInstance inst;
            inst.n = n;
            inst.p = p;
            inst.criterion = Criterion::TwoStage;
            inst.first_stage_costs = C;
            inst.uncertainty = UncertaintySet::make_budgeted(lo, d, Rational(rng.uniform_int(0, 2)), mode);
            // a random partial first stage
            SelectionSolution x;
            x.role = SolutionRole::PartialFirstStage;
            x.chosen.assign(static_cast<std::size_t>(n), 0);
            int take = static_cast<int>(rng.uniform_int(0, p));
            for (int i = 0; i < take; ++i) x.chosen[static_cast<std::size_t>(i)] = 1;

            auto rep = evaluate_robust(x, inst);
            REQUIRE(rep.witness_costs.has_value());
            auto [y, q] = second_stage_completion(x, *rep.witness_costs, p);
            CHECK(dot(C, x.chosen) + q == rep.objective);
        }
    }
}

TEST_CASE("witness reproduction for budgeted recoverable evaluation") {
    auto rng = substream(43, 0);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 4 + static_cast<int>(rng.uniform_int(0, 3));
        const int p = 2;
        CostVector C, lo, d;
        for (int i = 0; i < n; ++i) {
            C.push_back(Rational(rng.uniform_int(1, 30)));
            lo.push_back(Rational(rng.uniform_int(1, 30)));
            d.push_back(Rational(rng.uniform_int(0, 30)));
        }
        for (auto mode : {BudgetMode::DiscreteItems, BudgetMode::VariableBudget}) {
            ProblemInstance inst;
            inst.n = n;
            inst.p = p;
            inst.criterion = Criterion::Recoverable;
            inst.first_stage_costs = C;
            inst.delta = rng.uniform_int(0, p);
            inst.delta_semantics = DeltaSemantics::ChangedAtMost;
            inst.uncertainty = UncertaintySet::make_budgeted(lo, d, Rational(rng.uniform_int(0, 2)), mode);
            auto x = full(n, {0, 1});
            auto rep = evaluate_robust(x, inst);
            REQUIRE(rep.witness_costs.has_value());
            auto [y, q] = recovery_best_response(x, *rep.witness_costs, p, inst.kept_min());
            CHECK(dot(C, x.chosen) + q == rep.objective);
        }
    }
}

TEST_CASE("brute force matches the worked examples") {
    SUBCASE("min-max discrete") {
        auto inst = test::minmax_discrete(2, {{1, 5, 3, 4}, {4, 2, 5, 1}});
        auto [x, v] = brute_force_robust_opt(inst);
        CHECK(v == Rational(5));
        CHECK(x.support() == std::vector<int>{0, 3});
    }
    SUBCASE("regret discrete") {
        auto inst = test::regret_discrete(2, {{1, 5, 3, 4}, {4, 2, 5, 1}});
        auto [x, v] = brute_force_robust_opt(inst);
        CHECK(v == Rational(2));
        CHECK(x.support() == std::vector<int>{0, 3});
    }
    SUBCASE("two-stage discrete enumerates partial first stages") {
        auto inst = test::two_stage_discrete(2, {2, 10, 10}, {{9, 1, 8}, {9, 8, 1}});
        auto [x, v] = brute_force_robust_opt(inst);
        CHECK(v == Rational(3));
        CHECK(x.support() == std::vector<int>{0});
    }
    SUBCASE("size guard refuses big instances") {
        auto inst = test::minmax_discrete(2, {{1, 5, 3, 4}, {4, 2, 5, 1}});
        BruteForceLimits limits;
        limits.max_n = 3;
        CHECK_THROWS(brute_force_robust_opt(inst, limits));
    }
}

TEST_CASE("regret objective is never negative") {
    auto rng = substream(7, 1);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + static_cast<int>(rng.uniform_int(0, 4));
        const int p = 1 + static_cast<int>(rng.uniform_int(0, n - 2));
        if (rng.coin()) {
            std::vector<std::vector<std::int64_t>> scen;
            const int N = 1 + static_cast<int>(rng.uniform_int(0, 2));
            for (int j = 0; j < N; ++j) {
                std::vector<std::int64_t> row;
                for (int i = 0; i < n; ++i) row.push_back(rng.uniform_int(0, 50));
                scen.push_back(std::move(row));
            }
            auto inst = test::regret_discrete(p, scen);
            auto [x, v] = brute_force_robust_opt(inst);
            CHECK(v >= Rational(0));
        } else {
            std::vector<std::int64_t> lo, d;
            for (int i = 0; i < n; ++i) {
                lo.push_back(rng.uniform_int(0, 50));
                d.push_back(rng.uniform_int(0, 50));
            }
            auto inst = test::regret_interval(p, lo, d);
            auto [x, v] = brute_force_robust_opt(inst);
            CHECK(v >= Rational(0));
        }
    }
}

TEST_CASE("evaluation rejects role and pairing mismatches") {
    auto inst = test::minmax_discrete(2, {{1, 2, 3, 4}});
    CHECK_THROWS(evaluate_robust(partial(4, {0}), inst));
    CHECK_THROWS(evaluate_robust(full(4, {0}), inst)); // wrong cardinality
    ProblemInstance bad = inst;
    bad.criterion = Criterion::MinMaxRegret;
    bad.uncertainty = UncertaintySet::make_budgeted(costs({1, 2, 3, 4}), costs({1, 1, 1, 1}),
                                                    Rational(1), BudgetMode::ContinuousItems);
    CHECK_THROWS(evaluate_robust(full(4, {0, 1}), bad));
}
