#ifndef ROBSEL_TESTS_HIRO_ORACLE_HPP
#define ROBSEL_TESTS_HIRO_ORACLE_HPP

// Independent brute-force oracle for the hardening value of tiny
// discrete-uncertainty instances:
//
//   max over perturbed costs of (robust optimum of the perturbed instance)
//
// Decomposition: fix, for every feasible first-stage solution x, the
// scenario sigma(x) that attacks it (and, for regret, the per-scenario
// optimum y_j). For a fixed assignment the adversary's problem is a plain
// LP over the perturbation boxes and sum caps, because every inner response
// (completion / recovery) can be written as one row per feasible response.
// The hardening value is the maximum over all assignments. A pure grid
// enumeration over box vertices is NOT sufficient: with a binding sum cap
// the optimum may sit strictly inside the box (for example maximizing
// min(c1, c2) under c1 + c2 <= 9 over [2,6] x [3,7] peaks at (4.5, 4.5)),
// which is why the assignment decomposition is used. The vertex grid is
// still enumerated as a lower-bound cross-check.

#include <stdexcept>
#include <vector>

#include "robsel/evaluate.hpp"
#include "robsel/hiro.hpp"
#include "robsel/milp/solve.hpp"

namespace robsel::test {

namespace oracle_detail {

inline void enumerate_solutions(const ProblemInstance& inst, std::vector<SelectionSolution>& out) {
    const bool partial = inst.criterion == Criterion::TwoStage;
    const int n = inst.n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int count = __builtin_popcount(mask);
        if (partial ? count > inst.p : count != inst.p) continue;
        SelectionSolution s;
        s.role = partial ? SolutionRole::PartialFirstStage : SolutionRole::Full;
        s.chosen.assign(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) s.chosen[static_cast<std::size_t>(i)] = 1;
        }
        out.push_back(std::move(s));
    }
}

// every full response compatible with x: completions (two-stage) or
// recovery solutions (recoverable)
inline void enumerate_responses(const ProblemInstance& inst, const SelectionSolution& x,
                                std::vector<std::vector<int>>& out) {
    const int n = inst.n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) !=
            (inst.criterion == Criterion::TwoStage ? inst.p - x.count() : inst.p)) {
            continue;
        }
        std::vector<int> y(static_cast<std::size_t>(n), 0);
        bool ok = true;
        int overlap = 0;
        for (int i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            y[static_cast<std::size_t>(i)] = 1;
            if (x.chosen[static_cast<std::size_t>(i)]) {
                if (inst.criterion == Criterion::TwoStage) ok = false; // disjoint completion
                ++overlap;
            }
        }
        if (!ok) continue;
        if (inst.criterion == Criterion::Recoverable && overlap < inst.kept_min()) continue;
        out.push_back(std::move(y));
    }
}

} // namespace oracle_detail

/// Exact hardening value by assignment enumeration; see the header comment.
/// Throws when the instance is too large to enumerate.
inline double hiro_oracle_value(const ProblemInstance& inst, const HiroConfig& cfg) {
    using namespace milp;
    const auto& scenarios = inst.uncertainty.discrete.scenarios;
    const int n = inst.n;
    const int N = static_cast<int>(scenarios.size());
    const bool two_stage_like = inst.is_two_stage_like();
    const bool perturb_scenarios = !two_stage_like || cfg.mode == HiroMode::FirstAndSecondStage;

    std::vector<SelectionSolution> X;
    oracle_detail::enumerate_solutions(inst, X);
    const std::size_t S = X.size();

    double assignments = 1;
    for (std::size_t k = 0; k < S; ++k) assignments *= N;
    double ytuples = 1;
    if (inst.criterion == Criterion::MinMaxRegret) {
        for (int j = 0; j < N; ++j) ytuples *= static_cast<double>(S);
    }
    if (assignments * ytuples > 300000.0) {
        throw std::invalid_argument("instance too large for the hardening oracle");
    }

    std::vector<PerturbationNeighborhood> nbs;
    for (int j = 0; j < N; ++j) nbs.emplace_back(scenarios[static_cast<std::size_t>(j)], cfg.b, cfg.c_max);
    std::optional<PerturbationNeighborhood> Cnb;
    if (two_stage_like) Cnb.emplace(*inst.first_stage_costs, cfg.b, cfg.c_max);

    // assignment odometer: sigma[k] in [0, N); for regret also ysel[j] in [0, S)
    std::vector<int> sigma(S, 0);
    std::vector<int> ysel(static_cast<std::size_t>(std::max(N, 1)), 0);

    double best = -1e300;
    bool done = false;
    while (!done) {
        std::vector<int> yodo(static_cast<std::size_t>(std::max(N, 1)), 0);
        bool ydone = false;
        while (!ydone) {
            MilpModel m;
            int t = m.add_continuous("t", std::nullopt, std::nullopt);
            std::vector<std::vector<int>> cvars(static_cast<std::size_t>(N));
            if (perturb_scenarios) {
                for (int j = 0; j < N; ++j) {
                    std::vector<Term> cap;
                    for (int i = 0; i < n; ++i) {
                        int v = m.add_continuous("c" + std::to_string(j) + "_" + std::to_string(i),
                                                 nbs[static_cast<std::size_t>(j)].lower_bound(static_cast<std::size_t>(i)),
                                                 nbs[static_cast<std::size_t>(j)].upper_bound(static_cast<std::size_t>(i)));
                        cvars[static_cast<std::size_t>(j)].push_back(v);
                        cap.push_back({v, Rational(1)});
                    }
                    m.add_constraint(std::move(cap), Relation::LessEqual,
                                     nbs[static_cast<std::size_t>(j)].sum_cap());
                }
            }
            std::vector<int> Cvars;
            if (two_stage_like) {
                std::vector<Term> cap;
                for (int i = 0; i < n; ++i) {
                    int v = m.add_continuous("C_" + std::to_string(i),
                                             Cnb->lower_bound(static_cast<std::size_t>(i)),
                                             Cnb->upper_bound(static_cast<std::size_t>(i)));
                    Cvars.push_back(v);
                    cap.push_back({v, Rational(1)});
                }
                m.add_constraint(std::move(cap), Relation::LessEqual, Cnb->sum_cap());
            }

            auto scenario_term = [&](std::vector<Term>& row, int j, int i, const Rational& coef,
                                     Rational& rhs) {
                if (perturb_scenarios) {
                    row.push_back({cvars[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)], coef});
                } else {
                    rhs -= coef * scenarios[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                }
            };

            bool feasible_combo = true;
            for (std::size_t k = 0; k < S && feasible_combo; ++k) {
                const auto& x = X[k];
                const int j = sigma[k];
                if (inst.criterion == Criterion::MinMax) {
                    // t <= c^j . x
                    std::vector<Term> row{{t, Rational(1)}};
                    Rational rhs(0);
                    for (int i = 0; i < n; ++i) {
                        if (x.chosen[static_cast<std::size_t>(i)]) scenario_term(row, j, i, Rational(-1), rhs);
                    }
                    m.add_constraint(std::move(row), Relation::LessEqual, rhs);
                } else if (inst.criterion == Criterion::MinMaxRegret) {
                    // t <= c^j . x - c^j . y_j with y_j the scenario optimum
                    const auto& yj = X[static_cast<std::size_t>(yodo[static_cast<std::size_t>(j)])];
                    std::vector<Term> row{{t, Rational(1)}};
                    Rational rhs(0);
                    for (int i = 0; i < n; ++i) {
                        int coef = (yj.chosen[static_cast<std::size_t>(i)] ? 1 : 0) -
                                   (x.chosen[static_cast<std::size_t>(i)] ? 1 : 0);
                        if (coef != 0) scenario_term(row, j, i, Rational(coef), rhs);
                    }
                    m.add_constraint(std::move(row), Relation::LessEqual, rhs);
                } else {
                    // t <= C.x + c^j . y for every compatible response y
                    std::vector<std::vector<int>> responses;
                    oracle_detail::enumerate_responses(inst, x, responses);
                    if (responses.empty()) {
                        feasible_combo = false;
                        break;
                    }
                    for (const auto& y : responses) {
                        std::vector<Term> row{{t, Rational(1)}};
                        Rational rhs(0);
                        for (int i = 0; i < n; ++i) {
                            if (x.chosen[static_cast<std::size_t>(i)]) {
                                row.push_back({Cvars[static_cast<std::size_t>(i)], Rational(-1)});
                            }
                            if (y[static_cast<std::size_t>(i)]) scenario_term(row, j, i, Rational(-1), rhs);
                        }
                        m.add_constraint(std::move(row), Relation::LessEqual, rhs);
                    }
                }
            }

            if (inst.criterion == Criterion::MinMaxRegret) {
                // force each y_j to be optimal for its scenario
                for (int j = 0; j < N; ++j) {
                    const auto& yj = X[static_cast<std::size_t>(yodo[static_cast<std::size_t>(j)])];
                    for (const auto& other : X) {
                        std::vector<Term> row;
                        Rational rhs(0);
                        for (int i = 0; i < n; ++i) {
                            int coef = (yj.chosen[static_cast<std::size_t>(i)] ? 1 : 0) -
                                       (other.chosen[static_cast<std::size_t>(i)] ? 1 : 0);
                            if (coef != 0) scenario_term(row, j, i, Rational(coef), rhs);
                        }
                        if (!row.empty()) m.add_constraint(std::move(row), Relation::LessEqual, rhs);
                    }
                }
            }

            if (feasible_combo) {
                m.set_objective({{t, Rational(1)}}, Sense::Maximize);
                SolverConfig cfg_lp;
                cfg_lp.certify_exact = false;
                auto r = solve_lp(m, cfg_lp);
                if (r.status == SolveStatus::Optimal && r.objective > best) best = r.objective;
            }

            if (inst.criterion != Criterion::MinMaxRegret) break;
            // advance the y odometer
            ydone = true;
            for (int j = 0; j < N; ++j) {
                if (++yodo[static_cast<std::size_t>(j)] < static_cast<int>(S)) {
                    ydone = false;
                    break;
                }
                yodo[static_cast<std::size_t>(j)] = 0;
            }
        }

        // advance the assignment odometer
        done = true;
        for (std::size_t k = 0; k < S; ++k) {
            if (++sigma[k] < N) {
                done = false;
                break;
            }
            sigma[k] = 0;
        }
    }
    if (best < -1e299) throw std::runtime_error("hardening oracle produced no value");
    return best;
}

/// Lower-bound cross check: robust optimum over perturbed scenario vectors
/// drawn from the box vertices (plus the unperturbed input), filtered by the
/// sum caps.
inline double hiro_vertex_grid_value(const ProblemInstance& inst, const HiroConfig& cfg) {
    const auto& scenarios = inst.uncertainty.discrete.scenarios;
    const int n = inst.n;
    const int N = static_cast<int>(scenarios.size());
    if (inst.criterion != Criterion::MinMax) {
        throw std::invalid_argument("vertex grid cross-check only runs on min-max instances");
    }
    if (n > 6 || N > 3) throw std::invalid_argument("too large for the vertex grid");

    std::vector<PerturbationNeighborhood> nbs;
    for (int j = 0; j < N; ++j) nbs.emplace_back(scenarios[static_cast<std::size_t>(j)], cfg.b, cfg.c_max);

    // per-scenario candidate vectors: feasible box vertices + input
    std::vector<std::vector<CostVector>> choices(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) {
        choices[static_cast<std::size_t>(j)].push_back(scenarios[static_cast<std::size_t>(j)]);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            CostVector c(static_cast<std::size_t>(n));
            Rational total(0);
            for (int i = 0; i < n; ++i) {
                c[static_cast<std::size_t>(i)] = (mask & (1u << i))
                                                     ? nbs[static_cast<std::size_t>(j)].upper_bound(static_cast<std::size_t>(i))
                                                     : nbs[static_cast<std::size_t>(j)].lower_bound(static_cast<std::size_t>(i));
                total += c[static_cast<std::size_t>(i)];
            }
            if (!(nbs[static_cast<std::size_t>(j)].sum_cap() < total)) {
                choices[static_cast<std::size_t>(j)].push_back(std::move(c));
            }
        }
    }

    double best = -1e300;
    std::vector<std::size_t> odo(static_cast<std::size_t>(N), 0);
    while (true) {
        ProblemInstance candidate = inst;
        for (int j = 0; j < N; ++j) {
            candidate.uncertainty.discrete.scenarios[static_cast<std::size_t>(j)] =
                choices[static_cast<std::size_t>(j)][odo[static_cast<std::size_t>(j)]];
        }
        auto [x, v] = brute_force_robust_opt(candidate);
        best = std::max(best, v.to_double());
        int j = 0;
        for (; j < N; ++j) {
            if (++odo[static_cast<std::size_t>(j)] < choices[static_cast<std::size_t>(j)].size()) break;
            odo[static_cast<std::size_t>(j)] = 0;
        }
        if (j == N) break;
    }
    return best;
}

} // namespace robsel::test

#endif
