#include "robsel/hiro.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "robsel/formulations.hpp"
#include "robsel/io.hpp"
#include "robsel/milp/solve.hpp"

namespace robsel {

using milp::MilpModel;
using milp::Relation;
using milp::Sense;
using milp::Term;

namespace {

using Clock = std::chrono::steady_clock;

// Snap grid for solver output. Coarse enough that two distinct selection
// values on the grid differ by far more than the solver's pruning margin,
// fine enough that the rounding noise stays below every stated tolerance.
constexpr std::int64_t kSnapDen = std::int64_t(1) << 24;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string idx2s(const std::string& s, int a, int b) {
    return s + "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}
std::string idx3s(const std::string& s, int a, int b, int c) {
    return s + "[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "]";
}

} // namespace

const char* to_string(HiroMode m) {
    switch (m) {
        case HiroMode::FirstStageOnly: return "first_stage_only";
        case HiroMode::FirstAndSecondStage: return "first_and_second_stage";
        case HiroMode::LowerBounds: return "lower_bounds";
        case HiroMode::Deviations: return "deviations";
        case HiroMode::Both: return "both";
    }
    return "?";
}

PerturbationNeighborhood::PerturbationNeighborhood(CostVector base, Rational b, Rational c_max)
    : base_(std::move(base)), b_(std::move(b)), c_max_(std::move(c_max)) {
    if (b_.is_negative()) throw std::invalid_argument("perturbation budget must be non-negative");
    if (!(Rational(0) < c_max_)) throw std::invalid_argument("cost cap must be positive");
}

Rational PerturbationNeighborhood::lower_bound(std::size_t i) const {
    return max(base_[i] - b_, Rational(0));
}

Rational PerturbationNeighborhood::upper_bound(std::size_t i) const {
    return min(base_[i] + b_, c_max_);
}

Rational PerturbationNeighborhood::sum_cap() const { return sum(base_); }

bool PerturbationNeighborhood::contains(const CostVector& candidate) const {
    if (candidate.size() != base_.size()) return false;
    Rational total;
    for (std::size_t i = 0; i < candidate.size(); ++i) {
        if (candidate[i] < lower_bound(i) || upper_bound(i) < candidate[i]) return false;
        total += candidate[i];
    }
    return !(sum_cap() < total);
}

CostVector PerturbationNeighborhood::clamp(const std::vector<double>& values) const {
    if (values.size() != base_.size()) throw std::invalid_argument("clamp length mismatch");
    CostVector out(base_.size());
    for (std::size_t i = 0; i < base_.size(); ++i) {
        Rational lo = lower_bound(i);
        Rational hi = upper_bound(i);
        Rational v = Rational::round_to_grid(values[i], kSnapDen);
        if (v < lo) v = lo;
        if (hi < v) v = hi;
        out[i] = v;
    }
    // repair the sum cap by walking excess out of late coordinates
    Rational excess = sum(out) - sum_cap();
    for (std::size_t k = base_.size(); k-- > 0 && Rational(0) < excess;) {
        Rational slack = out[k] - lower_bound(k);
        Rational take = min(slack, excess);
        out[k] -= take;
        excess -= take;
    }
    if (Rational(0) < excess) throw std::logic_error("neighborhood repair failed");
    return out;
}

namespace {

struct MasterContext {
    MilpModel model;
    // variable ids of each perturbed scenario vector; empty when fixed
    std::vector<std::vector<int>> scenario_vars;
    std::vector<int> first_stage_vars;
};

// Adds box-bounded variables plus the non-increasing-sum row for one
// perturbed vector.
std::vector<int> add_perturbed_vector(MilpModel& m, const std::string& name,
                                      const PerturbationNeighborhood& nb) {
    std::vector<int> vars;
    const auto& base = nb.base();
    for (std::size_t i = 0; i < base.size(); ++i) {
        vars.push_back(m.add_continuous(name + "[" + std::to_string(i) + "]", nb.lower_bound(i),
                                        nb.upper_bound(i)));
    }
    std::vector<Term> cap;
    for (int v : vars) cap.push_back({v, Rational(1)});
    m.add_constraint(std::move(cap), Relation::LessEqual, nb.sum_cap());
    return vars;
}

// Product linearization d = lambda * c for one (i, j, k) triple:
// d <= c, d <= hi * lambda, d >= 0. Valid because the master maximizes
// through d.
int add_product_var(MilpModel& m, const std::string& name, int c_var, int lambda_var,
                    const Rational& hi) {
    int d = m.add_continuous(name, Rational(0), std::nullopt);
    m.add_constraint({{d, Rational(1)}, {c_var, Rational(-1)}}, Relation::LessEqual, Rational(0));
    m.add_constraint({{d, Rational(1)}, {lambda_var, -hi}}, Relation::LessEqual, Rational(0));
    return d;
}

struct MasterOutcome {
    bool solved = false;
    double objective = 0.0;
    std::vector<CostVector> scenarios;               // clamped
    std::optional<CostVector> first_stage;           // clamped
};

// Builds and solves the scenario-assignment master for the current
// candidate pool; returns the perturbed cost vectors.
MasterOutcome solve_master(const ProblemInstance& inst, const HiroConfig& cfg,
                           const std::vector<SelectionSolution>& candidates, double remaining_time) {
    const auto& scenarios = inst.uncertainty.discrete.scenarios;
    const int n = inst.n;
    const int N = static_cast<int>(scenarios.size());
    const int K = static_cast<int>(candidates.size());
    const bool two_stage_like = inst.is_two_stage_like();
    const bool perturb_scenarios = !two_stage_like || cfg.mode == HiroMode::FirstAndSecondStage;

    std::vector<PerturbationNeighborhood> nbs;
    for (int j = 0; j < N; ++j) nbs.emplace_back(scenarios[static_cast<std::size_t>(j)], cfg.b, cfg.c_max);

    MilpModel m;
    int t = m.add_continuous("t", std::nullopt, std::nullopt);

    std::vector<std::vector<int>> cvars(static_cast<std::size_t>(N));
    if (perturb_scenarios) {
        for (int j = 0; j < N; ++j) {
            cvars[static_cast<std::size_t>(j)] =
                add_perturbed_vector(m, "c[" + std::to_string(j) + "]", nbs[static_cast<std::size_t>(j)]);
        }
    }

    std::vector<int> Cvars;
    std::optional<PerturbationNeighborhood> Cnb;
    if (two_stage_like) {
        Cnb.emplace(*inst.first_stage_costs, cfg.b, cfg.c_max);
        Cvars = add_perturbed_vector(m, "C", *Cnb);
    }

    // scenario assignment binaries
    std::vector<std::vector<int>> lambda(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
        std::vector<Term> one;
        for (int j = 0; j < N; ++j) {
            int v = m.add_binary(idx2s("lambda", k, j));
            lambda[static_cast<std::size_t>(k)].push_back(v);
            one.push_back({v, Rational(1)});
        }
        m.add_constraint(std::move(one), Relation::Equal, Rational(1));
    }

    auto upper = [&](int j, int i) {
        return nbs[static_cast<std::size_t>(j)].upper_bound(static_cast<std::size_t>(i));
    };

    if (inst.criterion == Criterion::MinMax) {
        // t <= value of candidate k under its assigned scenario
        for (int k = 0; k < K; ++k) {
            std::vector<Term> row{{t, Rational(1)}};
            for (int j = 0; j < N; ++j) {
                for (int i = 0; i < n; ++i) {
                    if (!candidates[static_cast<std::size_t>(k)].chosen[static_cast<std::size_t>(i)]) continue;
                    int d = add_product_var(m, idx3s("d", i, j, k), cvars[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)],
                                            lambda[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)], upper(j, i));
                    row.push_back({d, Rational(-1)});
                }
            }
            m.add_constraint(std::move(row), Relation::LessEqual, Rational(0));
        }
    } else if (inst.criterion == Criterion::MinMaxRegret) {
        // adversary also picks the per-scenario optimum y^j
        std::vector<std::vector<int>> yvars(static_cast<std::size_t>(N));
        for (int j = 0; j < N; ++j) {
            std::vector<Term> card;
            for (int i = 0; i < n; ++i) {
                int y = m.add_binary(idx2s("y", j, i));
                yvars[static_cast<std::size_t>(j)].push_back(y);
                card.push_back({y, Rational(1)});
            }
            m.add_constraint(std::move(card), Relation::Equal, Rational(inst.p));
        }
        for (int k = 0; k < K; ++k) {
            std::vector<Term> row{{t, Rational(1)}};
            for (int j = 0; j < N; ++j) {
                for (int i = 0; i < n; ++i) {
                    int cv = cvars[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                    int lv = lambda[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                    if (candidates[static_cast<std::size_t>(k)].chosen[static_cast<std::size_t>(i)]) {
                        int d = add_product_var(m, idx3s("d", i, j, k), cv, lv, upper(j, i));
                        row.push_back({d, Rational(-1)});
                    }
                    // a = lambda * c * y, forced from below
                    int a = m.add_continuous(idx3s("a", i, j, k), Rational(0), std::nullopt);
                    m.add_constraint({{a, Rational(1)},
                                      {cv, Rational(-1)},
                                      {lv, -upper(j, i)},
                                      {yvars[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)], -upper(j, i)}},
                                     Relation::GreaterEqual, -(upper(j, i) + upper(j, i)));
                    row.push_back({a, Rational(1)});
                }
            }
            m.add_constraint(std::move(row), Relation::LessEqual, Rational(0));
        }
    } else {
        // two-stage or recoverable: completion/recovery dual per candidate
        const bool recoverable = inst.criterion == Criterion::Recoverable;
        for (int k = 0; k < K; ++k) {
            const auto& xk = candidates[static_cast<std::size_t>(k)];
            int beta = m.add_continuous("beta[" + std::to_string(k) + "]", Rational(0), std::nullopt);
            int eta = -1;
            if (recoverable) {
                eta = m.add_continuous("eta[" + std::to_string(k) + "]", Rational(0), std::nullopt);
            }
            std::vector<int> gammas;
            for (int i = 0; i < n; ++i) {
                gammas.push_back(m.add_continuous(idx2s("gamma", k, i), Rational(0), std::nullopt));
            }

            // t <= C x^k + (dual value of the response problem)
            std::vector<Term> row{{t, Rational(1)}};
            for (int i = 0; i < n; ++i) {
                if (xk.chosen[static_cast<std::size_t>(i)]) {
                    row.push_back({Cvars[static_cast<std::size_t>(i)], Rational(-1)});
                }
            }
            if (recoverable) {
                row.push_back({beta, Rational(-inst.p)});
                row.push_back({eta, Rational(-inst.kept_min())});
                for (int i = 0; i < n; ++i) row.push_back({gammas[static_cast<std::size_t>(i)], Rational(1)});
            } else {
                row.push_back({beta, Rational(-(inst.p - xk.count()))});
                for (int i = 0; i < n; ++i) {
                    if (!xk.chosen[static_cast<std::size_t>(i)]) {
                        row.push_back({gammas[static_cast<std::size_t>(i)], Rational(1)});
                    }
                }
            }
            m.add_constraint(std::move(row), Relation::LessEqual, Rational(0));

            // dual feasibility rows: beta (+ eta on kept items) bounded by the
            // assigned scenario's cost
            for (int i = 0; i < n; ++i) {
                std::vector<Term> dual{{beta, Rational(1)}, {gammas[static_cast<std::size_t>(i)], Rational(-1)}};
                if (recoverable && xk.chosen[static_cast<std::size_t>(i)]) {
                    dual.push_back({eta, Rational(1)});
                }
                Rational rhs(0);
                if (perturb_scenarios) {
                    for (int j = 0; j < N; ++j) {
                        int d = add_product_var(m, idx3s("e", i, j, k), cvars[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)],
                                                lambda[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)], upper(j, i));
                        dual.push_back({d, Rational(-1)});
                    }
                } else {
                    for (int j = 0; j < N; ++j) {
                        dual.push_back({lambda[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)],
                                        -scenarios[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]});
                    }
                }
                m.add_constraint(std::move(dual), Relation::LessEqual, rhs);
            }
        }
    }

    m.set_objective({{t, Rational(1)}}, Sense::Maximize);

    milp::SolverConfig scfg = cfg.solver;
    scfg.time_limit_seconds = std::min(scfg.time_limit_seconds, remaining_time);
    auto result = milp::solve_milp(m, scfg);

    MasterOutcome out;
    if (result.status != milp::SolveStatus::Optimal) return out;
    out.solved = true;
    out.objective = result.objective;
    out.scenarios.resize(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) {
        if (perturb_scenarios) {
            std::vector<double> vals;
            for (int v : cvars[static_cast<std::size_t>(j)]) vals.push_back(result.values[static_cast<std::size_t>(v)]);
            out.scenarios[static_cast<std::size_t>(j)] = nbs[static_cast<std::size_t>(j)].clamp(vals);
        } else {
            out.scenarios[static_cast<std::size_t>(j)] = scenarios[static_cast<std::size_t>(j)];
        }
    }
    if (two_stage_like) {
        std::vector<double> vals;
        for (int v : Cvars) vals.push_back(result.values[static_cast<std::size_t>(v)]);
        out.first_stage = Cnb->clamp(vals);
    }
    return out;
}

ProblemInstance instance_with_costs(const ProblemInstance& inst, std::vector<CostVector> scenarios,
                                    std::optional<CostVector> first_stage) {
    ProblemInstance out = inst;
    out.uncertainty.discrete.scenarios = std::move(scenarios);
    if (first_stage) out.first_stage_costs = std::move(first_stage);
    return out;
}

} // namespace

std::pair<ProblemInstance, HiroTrace> harden_iterative(const ProblemInstance& inst,
                                                       const HiroConfig& cfg) {
    require_valid(inst);
    if (inst.uncertainty.kind != UncertaintySet::Kind::Discrete) {
        throw std::invalid_argument("iterative hardening needs a discrete uncertainty set");
    }
    if (inst.is_two_stage_like()) {
        if (cfg.mode != HiroMode::FirstStageOnly && cfg.mode != HiroMode::FirstAndSecondStage) {
            throw std::invalid_argument("two-stage/recoverable hardening needs a first-stage mode");
        }
    }
    const auto start = Clock::now();
    HiroTrace trace;

    // exact robust optimum of the input seeds the candidate pool
    auto seed_solve = solve_robust(inst, cfg.solver);
    if (seed_solve.status != milp::SolveStatus::Optimal) {
        throw std::runtime_error("could not solve the input instance exactly");
    }
    trace.input_value = seed_solve.value;
    trace.best_value = seed_solve.value;

    ProblemInstance best = inst;
    std::vector<SelectionSolution> candidates{seed_solve.solution};

    const std::string parent_hash = content_hash(canonical_bytes(inst));
    bool converged = false;

    if (!cfg.b.is_zero()) {
        for (int iter = 0; iter < cfg.max_iterations; ++iter) {
            double remaining = cfg.time_limit_seconds - seconds_since(start);
            if (remaining <= 0) break;

            auto master = solve_master(inst, cfg, candidates, remaining);
            if (!master.solved) break;

            ProblemInstance hardened =
                instance_with_costs(inst, std::move(master.scenarios), std::move(master.first_stage));

            remaining = cfg.time_limit_seconds - seconds_since(start);
            if (remaining <= 0) break;
            milp::SolverConfig sub_cfg = cfg.solver;
            sub_cfg.time_limit_seconds = std::min(sub_cfg.time_limit_seconds, remaining);
            auto sub = solve_robust(hardened, sub_cfg);
            if (sub.status != milp::SolveStatus::Optimal) break;

            HiroIterationRecord rec;
            rec.candidate_count = static_cast<int>(candidates.size());
            rec.master_objective = master.objective;
            rec.hardened_value = sub.value;
            rec.elapsed_seconds = seconds_since(start);
            trace.iterations.push_back(rec);

            if (!(sub.value < trace.best_value)) { // ties prefer the latest
                trace.best_value = sub.value;
                best = hardened;
            }

            if (std::abs(master.objective - sub.value.to_double()) <= 1e-6) {
                converged = true;
                break;
            }
            bool known = false;
            for (const auto& c : candidates) {
                if (c == sub.solution) {
                    known = true;
                    break;
                }
            }
            if (known) break; // no progress possible
            candidates.push_back(sub.solution);
        }
    } else {
        converged = true; // singleton neighborhood
    }

    trace.converged = converged;
    if (canonical_bytes(best) != canonical_bytes(inst)) {
        HiroLineage lineage;
        lineage.parent_hash = parent_hash;
        lineage.b = cfg.b;
        lineage.mode = inst.is_two_stage_like() ? to_string(cfg.mode) : "scenarios";
        lineage.iterations = static_cast<int>(trace.iterations.size());
        best.provenance.hiro = std::move(lineage);
    }
    return {std::move(best), std::move(trace)};
}

} // namespace robsel
