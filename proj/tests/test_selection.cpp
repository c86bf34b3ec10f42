#include <doctest.h>

#include "robsel/selection.hpp"

using namespace robsel;

namespace {

CostVector costs(std::initializer_list<std::int64_t> vals) {
    CostVector v;
    for (auto x : vals) v.push_back(Rational(x));
    return v;
}

} // namespace

TEST_CASE("nominal selection picks the p cheapest items") {
    auto [sol, value] = solve_nominal_selection(costs({1, 2, 3}), 2);
    CHECK(sol.support() == std::vector<int>{0, 1});
    CHECK(value == Rational(3));
}

TEST_CASE("nominal selection breaks ties by lowest index") {
    auto [sol, value] = solve_nominal_selection(costs({5, 5, 5, 5}), 2);
    CHECK(sol.support() == std::vector<int>{0, 1});
    CHECK(value == Rational(10));
}

TEST_CASE("nominal selection matches subset enumeration") {
    // frozen from enumerating all C(4,3) subsets of (4,1,3,2)
    auto [sol, value] = solve_nominal_selection(costs({4, 1, 3, 2}), 3);
    CHECK(sol.support() == std::vector<int>{1, 2, 3});
    CHECK(value == Rational(6));
}

TEST_CASE("nominal selection rejects bad p") {
    CHECK_THROWS(solve_nominal_selection(costs({1, 2}), 0));
    CHECK_THROWS(solve_nominal_selection(costs({1, 2}), 3));
}

TEST_CASE("regret worst case raises chosen items to the upper bound") {
    auto x = SelectionSolution::from_support(2, {0});
    auto c = worst_case_regret_scenario(x, costs({1, 2}), costs({3, 4}));
    CHECK(c == costs({4, 2}));
}

TEST_CASE("regret worst case degenerate cases") {
    auto x = SelectionSolution::from_support(3, {1});
    CHECK(worst_case_regret_scenario(x, costs({1, 2, 3}), costs({0, 0, 0})) == costs({1, 2, 3}));
    auto all = SelectionSolution::from_support(3, {0, 1, 2});
    CHECK(worst_case_regret_scenario(all, costs({1, 2, 3}), costs({1, 1, 1})) == costs({2, 3, 4}));
    CHECK_THROWS(worst_case_regret_scenario(x, costs({1, 2}), costs({1, 2, 3})));
}

TEST_CASE("second-stage completion") {
    SUBCASE("nothing to complete") {
        auto x = SelectionSolution::from_support(3, {0, 2}, SolutionRole::PartialFirstStage);
        auto [y, cost] = second_stage_completion(x, costs({9, 1, 8}), 2);
        CHECK(y.count() == 0);
        CHECK(cost == Rational(0));
    }
    SUBCASE("empty first stage reduces to nominal selection") {
        auto x = SelectionSolution::from_support(3, {}, SolutionRole::PartialFirstStage);
        auto [y, cost] = second_stage_completion(x, costs({9, 1, 8}), 2);
        CHECK(cost == solve_nominal_selection(costs({9, 1, 8}), 2).second);
    }
    SUBCASE("completes with the cheapest outside item") {
        // frozen from enumerating all completions
        auto x = SelectionSolution::from_support(3, {0}, SolutionRole::PartialFirstStage);
        auto [y, cost] = second_stage_completion(x, costs({9, 1, 8}), 2);
        CHECK(y.support() == std::vector<int>{1});
        CHECK(cost == Rational(1));
    }
    SUBCASE("rejects oversized first stage") {
        auto x = SelectionSolution::from_support(3, {0, 1, 2}, SolutionRole::PartialFirstStage);
        CHECK_THROWS(second_stage_completion(x, costs({1, 2, 3}), 2));
    }
}

TEST_CASE("recovery best response") {
    auto x = SelectionSolution::from_support(4, {0, 1});
    SUBCASE("unconstrained equals nominal") {
        auto [y, cost] = recovery_best_response(x, costs({10, 9, 1, 2}), 2, 0);
        CHECK(cost == solve_nominal_selection(costs({10, 9, 1, 2}), 2).second);
    }
    SUBCASE("fully constrained keeps x") {
        auto [y, cost] = recovery_best_response(x, costs({10, 9, 1, 2}), 2, 2);
        CHECK(y == x);
        CHECK(cost == Rational(19));
    }
    SUBCASE("one kept item") {
        // frozen from enumerating all y with |y ^ x| >= 1
        auto [y, cost] = recovery_best_response(x, costs({10, 9, 1, 2}), 2, 1);
        CHECK(y.support() == std::vector<int>{1, 2});
        CHECK(cost == Rational(10));
    }
    SUBCASE("kept_min above p rejected") {
        CHECK_THROWS(recovery_best_response(x, costs({1, 2, 3, 4}), 2, 3));
    }
    SUBCASE("monotone in kept_min") {
        Rational prev(-1);
        for (int k = 0; k <= 2; ++k) {
            auto [y, cost] = recovery_best_response(x, costs({10, 9, 1, 2}), 2, k);
            CHECK(cost >= prev);
            prev = cost;
        }
        // and bounded above by keeping x itself
        CHECK(prev == dot(costs({10, 9, 1, 2}), x.chosen));
    }
}

TEST_CASE("lexicographic solution order prefers earlier supports") {
    CHECK(lex_before({1, 1, 0}, {1, 0, 1}));
    CHECK_FALSE(lex_before({1, 0, 1}, {1, 1, 0}));
    CHECK(lex_before({0, 0, 0}, {1, 0, 0})); // empty set is a prefix
    CHECK_FALSE(lex_before({1, 0, 0}, {1, 0, 0}));
}
