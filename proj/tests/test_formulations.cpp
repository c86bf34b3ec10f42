#include <doctest.h>

#include "robsel/formulations.hpp"
#include "robsel/rng.hpp"
#include "support/builders.hpp"

using namespace robsel;
using test::costs;

namespace {

Rational milp_optimum(const ProblemInstance& inst) {
    auto bundle = build_milp(inst);
    auto result = milp::solve_milp(bundle.model);
    REQUIRE(result.status == milp::SolveStatus::Optimal);
    // the extracted solution re-evaluates to the reported objective
    auto x = extract_solution(bundle, result);
    Rational v = evaluate_robust(x, inst).objective;
    CHECK(v.to_double() == doctest::Approx(result.objective).epsilon(1e-7));
    return v;
}

} // namespace

TEST_CASE("scenario optima") {
    std::vector<CostVector> scen{costs({1, 5, 3, 4}), costs({4, 2, 5, 1})};
    auto opts = scenario_optima(scen, 2);
    CHECK(opts == std::vector<Rational>{Rational(4), Rational(3)});
    CHECK(scenario_optima({costs({0, 0})}, 2) == std::vector<Rational>{Rational(0)});
    CHECK(scenario_optima({costs({7, 3})}, 1) == std::vector<Rational>{Rational(3)});
}

TEST_CASE("worked examples solve to their known optima") {
    SUBCASE("min-max discrete") {
        auto inst = test::minmax_discrete(2, {{1, 5, 3, 4}, {4, 2, 5, 1}});
        CHECK(milp_optimum(inst) == Rational(5));
    }
    SUBCASE("regret interval") {
        auto inst = test::regret_interval(1, {1, 2, 0}, {1, 0, 5});
        CHECK(milp_optimum(inst) == Rational(2));
    }
    SUBCASE("two-stage discrete with one scenario reduces to completion") {
        auto inst = test::two_stage_discrete(2, {2, 10, 10}, {{9, 1, 8}});
        auto [bx, bv] = brute_force_robust_opt(inst);
        CHECK(milp_optimum(inst) == bv);
    }
    SUBCASE("recoverable with delta = p keeps the first stage") {
        auto inst = test::recoverable_discrete(2, {5, 1, 1, 5}, {{1, 9, 9, 1}, {9, 1, 1, 9}}, 2,
                                               DeltaSemantics::KeptAtLeast);
        auto [bx, bv] = brute_force_robust_opt(inst);
        CHECK(milp_optimum(inst) == bv);
    }
}

TEST_CASE("minmax budgeted breakpoint enumeration") {
    auto inst = test::minmax_budgeted(2, {1, 1, 1}, {2, 3, 4}, Rational(1));
    auto [x, v] = solve_minmax_budgeted_enumeration(inst);
    CHECK(v == Rational(5));
    SUBCASE("gamma 0 reduces to nominal on lower bounds") {
        inst.uncertainty.budgeted.gamma = Rational(0);
        CHECK(solve_minmax_budgeted_enumeration(inst).second ==
              solve_nominal_selection(inst.uncertainty.budgeted.lower, 2).second);
    }
    SUBCASE("gamma n reduces to nominal on upper bounds") {
        inst.uncertainty.budgeted.gamma = Rational(3);
        CostVector upper = costs({3, 4, 5});
        CHECK(solve_minmax_budgeted_enumeration(inst).second ==
              solve_nominal_selection(upper, 2).second);
    }
    SUBCASE("pairing mismatch rejected") {
        auto other = test::regret_interval(1, {1, 2}, {3, 4});
        CHECK_THROWS(solve_minmax_budgeted_enumeration(other));
    }
}

TEST_CASE("regret interval breakpoint enumeration") {
    auto inst = test::regret_interval(1, {1, 2, 0}, {1, 0, 5});
    CHECK(solve_regret_interval_enumeration(inst).second == Rational(2));
    SUBCASE("no deviations means zero regret") {
        auto flat = test::regret_interval(2, {4, 1, 3}, {0, 0, 0});
        CHECK(solve_regret_interval_enumeration(flat).second == Rational(0));
    }
    SUBCASE("p = n means zero regret") {
        auto all = test::regret_interval(3, {4, 1, 3}, {2, 5, 1});
        CHECK(solve_regret_interval_enumeration(all).second == Rational(0));
    }
}

TEST_CASE("triple agreement on random min-max budgeted instances") {
    auto rng = substream(1001, 0);
    for (int trial = 0; trial < 60; ++trial) {
        auto inst = test::random_instance(1, rng, 8);
        auto [ex, ev] = solve_minmax_budgeted_enumeration(inst);
        auto [bx, bv] = brute_force_robust_opt(inst);
        CHECK(ev == bv);
        CHECK(milp_optimum(inst) == bv);
    }
}

TEST_CASE("triple agreement on random regret interval instances") {
    auto rng = substream(1002, 0);
    for (int trial = 0; trial < 60; ++trial) {
        auto inst = test::random_instance(2, rng, 8);
        auto [ex, ev] = solve_regret_interval_enumeration(inst);
        auto [bx, bv] = brute_force_robust_opt(inst);
        CHECK(ev == bv);
        CHECK(milp_optimum(inst) == bv);
    }
}

TEST_CASE("models agree with brute force across all pairings") {
    auto rng = substream(1003, 0);
    for (int pairing = 0; pairing < 10; ++pairing) {
        const int max_n = pairing == 8 ? 5 : 7;
        for (int trial = 0; trial < 12; ++trial) {
            auto inst = test::random_instance(pairing, rng, max_n);
            CAPTURE(pairing);
            CAPTURE(trial);
            auto [bx, bv] = brute_force_robust_opt(inst);
            CHECK(milp_optimum(inst) == bv);
        }
    }
}

TEST_CASE("min-max interval model equals nominal on upper bounds") {
    auto rng = substream(1004, 0);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + static_cast<int>(rng.uniform_int(0, 5));
        const int p = 1 + static_cast<int>(rng.uniform_int(0, n - 1));
        CostVector lo, d, upper;
        for (int i = 0; i < n; ++i) {
            lo.push_back(Rational(rng.uniform_int(0, 100)));
            d.push_back(Rational(rng.uniform_int(0, 100)));
            upper.push_back(lo.back() + d.back());
        }
        ProblemInstance inst;
        inst.n = n;
        inst.p = p;
        inst.criterion = Criterion::MinMax;
        inst.uncertainty = UncertaintySet::make_interval(lo, d);
        CHECK(milp_optimum(inst) == solve_nominal_selection(upper, p).second);
    }
}

TEST_CASE("build_milp validates pairings and budgets") {
    auto inst = test::minmax_budgeted(1, {1, 2}, {1, 1}, Rational(1, 2), BudgetMode::DiscreteItems);
    CHECK_THROWS(build_milp(inst)); // fractional gamma with discrete items
    ProblemInstance bad = test::regret_interval(1, {1, 2}, {1, 1});
    bad.criterion = Criterion::TwoStage;
    bad.first_stage_costs = costs({1, 2});
    CHECK_THROWS(build_milp(bad)); // two-stage interval unsupported
}

TEST_CASE("varmap names every symbol of the chosen formulation") {
    auto inst = test::regret_interval(1, {1, 2, 0}, {1, 0, 5});
    auto bundle = build_milp(inst);
    CHECK(bundle.varmap.count("x[0]"));
    CHECK(bundle.varmap.count("pi"));
    CHECK(bundle.varmap.count("rho[2]"));
}
