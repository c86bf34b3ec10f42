#include <doctest.h>

#include "robsel/formulations.hpp"
#include "robsel/hiro.hpp"
#include "robsel/io.hpp"
#include "robsel/samplers.hpp"
#include "support/builders.hpp"
#include "support/hiro_oracle.hpp"

using namespace robsel;

namespace {

HiroConfig config(std::int64_t b, HiroMode mode = HiroMode::FirstAndSecondStage) {
    HiroConfig cfg;
    cfg.b = Rational(b);
    cfg.mode = mode;
    cfg.time_limit_seconds = 120.0;
    return cfg;
}

void check_neighborhood(const CostVector& base, const CostVector& out, const Rational& b) {
    REQUIRE(base.size() == out.size());
    Rational total_base(0), total_out(0);
    for (std::size_t i = 0; i < base.size(); ++i) {
        CHECK(abs(out[i] - base[i]) <= b);
        CHECK(out[i] >= Rational(0));
        CHECK(out[i] <= Rational(100));
        total_base += base[i];
        total_out += out[i];
    }
    CHECK(total_out <= total_base);
}

} // namespace

TEST_CASE("perturbation neighborhood clamp") {
    PerturbationNeighborhood nb(test::costs({5, 5}), Rational(1), Rational(100));
    SUBCASE("zero budget is a singleton") {
        PerturbationNeighborhood zero(test::costs({5, 5}), Rational(0), Rational(100));
        auto out = zero.clamp({5.3, 4.9});
        CHECK(out == test::costs({5, 5}));
    }
    SUBCASE("snapped output always lies inside") {
        auto out = nb.clamp({6.2, 5.7}); // box-violating and cap-violating input
        CHECK(nb.contains(out));
    }
    SUBCASE("contains") {
        CHECK(nb.contains(test::costs({4, 6})));
        CHECK_FALSE(nb.contains(test::costs({6, 6}))); // sum cap
        CHECK_FALSE(nb.contains(test::costs({3, 5}))); // box
    }
}

TEST_CASE("iterative hardening on the worked min-max example") {
    auto inst = test::minmax_discrete(1, {{1, 9, 5}, {9, 1, 5}});
    auto [hardened, trace] = harden_iterative(inst, config(1));
    CHECK(trace.input_value == Rational(5));
    CHECK(trace.best_value == Rational(6));
    CHECK(trace.converged);
    // the hardened instance re-solves to the reported value
    auto [x, v] = brute_force_robust_opt(hardened);
    CHECK(v == Rational(6));
    // neighborhood feasibility of every scenario
    for (int j = 0; j < 2; ++j) {
        check_neighborhood(inst.uncertainty.discrete.scenarios[static_cast<std::size_t>(j)],
                           hardened.uncertainty.discrete.scenarios[static_cast<std::size_t>(j)],
                           Rational(1));
    }
    REQUIRE(hardened.provenance.hiro.has_value());
    CHECK(hardened.provenance.hiro->parent_hash == content_hash(canonical_bytes(inst)));
}

TEST_CASE("b = 0 returns the input bit-identically") {
    auto inst = test::minmax_discrete(2, {{3, 7, 9, 2}, {5, 5, 5, 5}});
    auto [hardened, trace] = harden_iterative(inst, config(0));
    CHECK(canonical_bytes(hardened) == canonical_bytes(inst));
    CHECK_FALSE(hardened.provenance.hiro.has_value());
    CHECK(trace.converged);
    CHECK(trace.best_value == trace.input_value);

    auto budgeted = test::minmax_budgeted(2, {10, 20, 30}, {5, 6, 7}, Rational(1));
    auto hb = harden_budgeted(budgeted, config(0, HiroMode::Both));
    CHECK(canonical_bytes(hb) == canonical_bytes(budgeted));

    auto interval = test::regret_interval(1, {1, 2, 0}, {1, 0, 5});
    auto hi = harden_regret_interval(interval, config(0, HiroMode::Both));
    CHECK(canonical_bytes(hi) == canonical_bytes(interval));
}

TEST_CASE("monotonicity and trace consistency on random discrete instances") {
    auto rng = substream(555, 0);
    for (int pairing : {0, 3, 4, 7}) {
        for (int trial = 0; trial < 3; ++trial) {
            auto inst = test::random_instance(pairing, rng, 5);
            // keep scenario count small: hardening masters grow fast
            if (inst.uncertainty.discrete.scenarios.size() > 2) {
                inst.uncertainty.discrete.scenarios.resize(2);
            }
            auto cfg = config(1 + rng.uniform_int(0, 1));
            auto [hardened, trace] = harden_iterative(inst, cfg);
            CAPTURE(pairing);
            CHECK(trace.best_value >= trace.input_value);
            auto [x, v] = brute_force_robust_opt(hardened);
            CHECK(v == trace.best_value);
            for (std::size_t j = 0; j < inst.uncertainty.discrete.scenarios.size(); ++j) {
                check_neighborhood(inst.uncertainty.discrete.scenarios[j],
                                   hardened.uncertainty.discrete.scenarios[j], cfg.b);
            }
            if (inst.is_two_stage_like()) {
                check_neighborhood(*inst.first_stage_costs, *hardened.first_stage_costs, cfg.b);
            }
            // master objectives are non-increasing over the iterations
            for (std::size_t k = 1; k < trace.iterations.size(); ++k) {
                CHECK(trace.iterations[k].master_objective <=
                      trace.iterations[k - 1].master_objective + 1e-6);
            }
        }
    }
}

TEST_CASE("toy-scale exactness against the assignment oracle") {
    auto rng = substream(556, 0);
    SUBCASE("min-max") {
        for (int trial = 0; trial < 4; ++trial) {
            auto inst = test::minmax_discrete(
                2, {{rng.uniform_int(1, 9), rng.uniform_int(1, 9), rng.uniform_int(1, 9), rng.uniform_int(1, 9)},
                    {rng.uniform_int(1, 9), rng.uniform_int(1, 9), rng.uniform_int(1, 9), rng.uniform_int(1, 9)}});
            auto cfg = config(1 + trial % 2);
            auto [hardened, trace] = harden_iterative(inst, cfg);
            REQUIRE(trace.converged);
            double oracle = test::hiro_oracle_value(inst, cfg);
            CHECK(trace.best_value.to_double() == doctest::Approx(oracle).epsilon(1e-6));
            // the vertex grid can only reach below the true optimum
            double grid = test::hiro_vertex_grid_value(inst, cfg);
            CHECK(grid <= oracle + 1e-6);
        }
    }
    SUBCASE("two-stage, first stage only") {
        auto inst = test::two_stage_discrete(2, {4, 6, 3, 8}, {{2, 9, 4, 7}, {8, 1, 6, 3}});
        auto cfg = config(2, HiroMode::FirstStageOnly);
        auto [hardened, trace] = harden_iterative(inst, cfg);
        REQUIRE(trace.converged);
        double oracle = test::hiro_oracle_value(inst, cfg);
        CHECK(trace.best_value.to_double() == doctest::Approx(oracle).epsilon(1e-6));
    }
    SUBCASE("recoverable, both stages") {
        auto inst = test::recoverable_discrete(2, {4, 6, 3, 8}, {{2, 9, 4, 7}}, 1,
                                               DeltaSemantics::ChangedAtMost);
        auto cfg = config(1, HiroMode::FirstAndSecondStage);
        auto [hardened, trace] = harden_iterative(inst, cfg);
        REQUIRE(trace.converged);
        double oracle = test::hiro_oracle_value(inst, cfg);
        CHECK(trace.best_value.to_double() == doctest::Approx(oracle).epsilon(1e-6));
    }
    SUBCASE("regret") {
        auto inst = test::regret_discrete(1, {{2, 9, 4}, {8, 1, 6}});
        auto cfg = config(1);
        auto [hardened, trace] = harden_iterative(inst, cfg);
        REQUIRE(trace.converged);
        double oracle = test::hiro_oracle_value(inst, cfg);
        CHECK(trace.best_value.to_double() == doctest::Approx(oracle).epsilon(1e-6));
    }
}

TEST_CASE("budgeted hardening") {
    auto inst = test::minmax_budgeted(2, {1, 1, 1}, {2, 3, 4}, Rational(1));
    Rational before = solve_minmax_budgeted_enumeration(inst).second;
    CHECK(before == Rational(5));

    for (auto mode : {HiroMode::LowerBounds, HiroMode::Deviations, HiroMode::Both}) {
        auto hardened = harden_budgeted(inst, config(1, mode));
        Rational after = solve_minmax_budgeted_enumeration(hardened).second;
        CAPTURE(to_string(mode));
        CHECK(after >= before);
        const auto& hu = hardened.uncertainty.budgeted;
        // map hardened vectors back to input items through the permutation
        std::vector<int> perm(static_cast<std::size_t>(inst.n));
        for (int i = 0; i < inst.n; ++i) perm[static_cast<std::size_t>(i)] = i;
        if (hardened.provenance.hiro && !hardened.provenance.hiro->permutation.empty()) {
            perm = hardened.provenance.hiro->permutation;
        }
        for (int k = 0; k < inst.n; ++k) {
            const auto i = static_cast<std::size_t>(perm[static_cast<std::size_t>(k)]);
            CHECK(abs(hu.lower[static_cast<std::size_t>(k)] - inst.uncertainty.budgeted.lower[i]) <=
                  Rational(1));
            CHECK(abs(hu.deviation[static_cast<std::size_t>(k)] -
                      inst.uncertainty.budgeted.deviation[i]) <= Rational(1));
        }
        CHECK(sum(hu.lower) <= sum(inst.uncertainty.budgeted.lower));
        CHECK(sum(hu.deviation) <= sum(inst.uncertainty.budgeted.deviation));
        if (mode != HiroMode::LowerBounds) {
            // deviations stay sorted in the re-indexed order
            for (int k = 0; k + 1 < inst.n; ++k) {
                CHECK(hu.deviation[static_cast<std::size_t>(k)] <=
                      hu.deviation[static_cast<std::size_t>(k + 1)]);
            }
        }
    }
}

TEST_CASE("budgeted hardening can strictly increase the optimum") {
    // with all lower bounds at the box ceiling the adversary reshuffles
    // deviations; a budget of 2 is enough to move the optimum up
    auto inst = test::minmax_budgeted(2, {10, 10, 10}, {2, 8, 8}, Rational(1));
    Rational before = solve_minmax_budgeted_enumeration(inst).second;
    auto hardened = harden_budgeted(inst, config(2, HiroMode::Deviations));
    Rational after = solve_minmax_budgeted_enumeration(hardened).second;
    CHECK(after >= before);
}

TEST_CASE("regret interval hardening") {
    auto inst = test::regret_interval(1, {1, 2, 0}, {1, 0, 5});
    Rational before = solve_regret_interval_enumeration(inst).second;
    CHECK(before == Rational(2));
    auto hardened = harden_regret_interval(inst, config(1, HiroMode::Both));
    Rational after = solve_regret_interval_enumeration(hardened).second;
    CHECK(after >= before);
    check_neighborhood(inst.uncertainty.interval.lower, hardened.uncertainty.interval.lower,
                       Rational(1));
    check_neighborhood(inst.uncertainty.interval.deviation, hardened.uncertainty.interval.deviation,
                       Rational(1));

    SUBCASE("zero-deviation input stays sound") {
        auto flat = test::regret_interval(1, {3, 4}, {0, 0});
        CHECK(solve_regret_interval_enumeration(flat).second == Rational(0));
        auto h = harden_regret_interval(flat, config(1, HiroMode::Both));
        CHECK(solve_regret_interval_enumeration(h).second >= Rational(0));
    }
}

TEST_CASE("regret interval master is exact at b = 0 on toy instances") {
    // with a singleton neighborhood the hardening model must reproduce the
    // input's regret optimum exactly; this validates the linearization rows
    auto rng = substream(557, 0);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 3 + static_cast<int>(rng.uniform_int(0, 1));
        std::vector<std::int64_t> lo, d;
        for (int i = 0; i < n; ++i) {
            lo.push_back(rng.uniform_int(0, 9));
            d.push_back(rng.uniform_int(0, 9));
        }
        auto inst = test::regret_interval(1 + static_cast<int>(rng.uniform_int(0, n - 2)), lo, d);
        auto hardened = harden_regret_interval(inst, config(0, HiroMode::Both));
        CHECK(canonical_bytes(hardened) == canonical_bytes(inst));
    }
}

TEST_CASE("mode validation") {
    auto discrete = test::minmax_discrete(1, {{1, 2}});
    auto budgeted = test::minmax_budgeted(1, {1, 2}, {1, 1}, Rational(1));
    CHECK_THROWS(harden_budgeted(discrete, config(1, HiroMode::Both)));
    CHECK_THROWS(harden_budgeted(budgeted, config(1, HiroMode::FirstStageOnly)));
    CHECK_THROWS(harden_regret_interval(budgeted, config(1, HiroMode::Both)));
    auto two_stage = test::two_stage_discrete(1, {1, 2}, {{3, 4}});
    CHECK_THROWS(harden_iterative(two_stage, config(1, HiroMode::LowerBounds)));
}
