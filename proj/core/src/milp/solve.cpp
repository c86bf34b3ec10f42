#include "robsel/milp/solve.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>

#include "simplex.hpp"

namespace robsel::milp {

namespace detail {

template <typename S>
SimplexCore<S> build_core(const MilpModel& m, const std::vector<std::optional<int>>* fixing) {
    const S proto{};
    const int nrows = m.constraint_count();
    const bool maximize = m.objective().sense == Sense::Maximize;

    std::vector<Column<S>> cols(static_cast<std::size_t>(m.var_count()));
    for (int j = 0; j < m.var_count(); ++j) {
        const auto& v = m.variables()[static_cast<std::size_t>(j)];
        auto& col = cols[static_cast<std::size_t>(j)];
        if (fixing && v.kind == VarKind::Binary && (*fixing)[static_cast<std::size_t>(j)]) {
            S val = S((*fixing)[static_cast<std::size_t>(j)].value());
            col.lower = val;
            col.upper = val;
        } else {
            if (v.lower) col.lower = to_scalar(*v.lower, proto);
            if (v.upper) col.upper = to_scalar(*v.upper, proto);
        }
    }
    for (const auto& t : m.objective().terms) {
        S c = to_scalar(t.coef, proto);
        cols[static_cast<std::size_t>(t.var)].cost += maximize ? S{} - c : c;
    }

    std::vector<S> rhs;
    rhs.reserve(static_cast<std::size_t>(nrows));
    for (int r = 0; r < nrows; ++r) {
        const auto& c = m.constraints()[static_cast<std::size_t>(r)];
        // aggregate duplicate variables within a row
        std::map<int, S> agg;
        for (const auto& t : c.terms) agg[t.var] += to_scalar(t.coef, proto);
        for (const auto& [var, coef] : agg) {
            if (coef == S{}) continue;
            cols[static_cast<std::size_t>(var)].entries.emplace_back(r, coef);
        }
        rhs.push_back(to_scalar(c.rhs, proto));
        if (c.rel != Relation::Equal) {
            Column<S> slack;
            slack.entries.emplace_back(r, S(1));
            if (c.rel == Relation::LessEqual) {
                slack.lower = S(0); // row + slack = rhs, slack >= 0
            } else {
                slack.upper = S(0); // slack <= 0 encodes row >= rhs
            }
            cols.push_back(std::move(slack));
        }
    }
    return SimplexCore<S>(nrows, std::move(cols), std::move(rhs));
}

} // namespace detail

namespace {

using detail::BigRational;
using detail::LpOutcome;
using detail::SimplexCore;

using Clock = std::chrono::steady_clock;

double objective_from_internal(const MilpModel& m, double internal) {
    const double constant = m.objective().constant.to_double();
    return m.objective().sense == Sense::Maximize ? constant - internal : constant + internal;
}

struct LpSolveOutput {
    LpOutcome outcome = LpOutcome::Numerical;
    std::vector<double> values;
    double internal_objective = 0.0;
    std::int64_t iterations = 0;
};

LpSolveOutput run_lp_double(const MilpModel& m, const std::vector<std::optional<int>>* fixing,
                            std::optional<Clock::time_point> deadline) {
    auto core = detail::build_core<double>(m, fixing);
    core.set_deadline(deadline);
    LpSolveOutput out;
    out.outcome = core.solve();
    out.iterations = core.iterations();
    if (out.outcome == LpOutcome::Optimal) {
        out.values.assign(core.values().begin(),
                          core.values().begin() + static_cast<std::ptrdiff_t>(m.var_count()));
        out.internal_objective = core.objective();
    }
    return out;
}

struct ExactOutput {
    LpOutcome outcome = LpOutcome::Numerical;
    BigRational internal_objective;
    std::vector<BigRational> values;
    std::vector<BigRational> duals;
    std::int64_t iterations = 0;
};

ExactOutput run_lp_exact(const MilpModel& m, const std::vector<std::optional<int>>* fixing) {
    auto core = detail::build_core<BigRational>(m, fixing);
    ExactOutput out;
    out.outcome = core.solve();
    out.iterations = core.iterations();
    if (out.outcome == LpOutcome::Optimal) {
        out.values.assign(core.values().begin(),
                          core.values().begin() + static_cast<std::ptrdiff_t>(m.var_count()));
        out.internal_objective = core.objective();
        out.duals = core.row_duals();
    }
    return out;
}

void require_valid_model(const MilpModel& m) {
    auto defects = validate_model(m);
    if (!defects.empty()) {
        std::string msg = "invalid model:";
        for (const auto& d : defects) msg += " " + d + ";";
        throw std::invalid_argument(msg);
    }
}

/// Attaches exact objective/values to a result when the model is small
/// enough to certify. `fixing` pins the incumbent's binaries.
void certify(const MilpModel& m, const std::vector<std::optional<int>>* fixing, SolveResult& res) {
    if (m.constraint_count() > 64 || m.nonzero_count() > 5000) return;
    auto exact = run_lp_exact(m, fixing);
    if (exact.outcome != LpOutcome::Optimal) return;
    BigRational obj = detail::to_scalar(m.objective().constant, BigRational{});
    if (m.objective().sense == Sense::Maximize) {
        obj -= exact.internal_objective;
    } else {
        obj += exact.internal_objective;
    }
    auto narrowed = detail::narrow_to_rational(obj);
    if (!narrowed) return;
    std::vector<Rational> vals;
    vals.reserve(exact.values.size());
    for (const auto& v : exact.values) {
        auto nv = detail::narrow_to_rational(v);
        if (!nv) return;
        vals.push_back(*nv);
    }
    res.objective_exact = *narrowed;
    res.objective = narrowed->to_double();
    res.values.clear();
    for (const auto& v : vals) res.values.push_back(v.to_double());
    res.values_exact = std::move(vals);
}

} // namespace

bool verify_assignment(const MilpModel& m, const std::vector<double>& values, double feas_tol) {
    if (values.size() != static_cast<std::size_t>(m.var_count())) return false;
    for (int j = 0; j < m.var_count(); ++j) {
        const auto& v = m.variables()[static_cast<std::size_t>(j)];
        double x = values[static_cast<std::size_t>(j)];
        if (v.lower && x < v.lower->to_double() - feas_tol) return false;
        if (v.upper && x > v.upper->to_double() + feas_tol) return false;
    }
    for (const auto& c : m.constraints()) {
        double act = 0.0;
        for (const auto& t : c.terms) act += t.coef.to_double() * values[static_cast<std::size_t>(t.var)];
        double rhs = c.rhs.to_double();
        switch (c.rel) {
            case Relation::LessEqual:
                if (act > rhs + feas_tol) return false;
                break;
            case Relation::GreaterEqual:
                if (act < rhs - feas_tol) return false;
                break;
            case Relation::Equal:
                if (std::abs(act - rhs) > feas_tol) return false;
                break;
        }
    }
    return true;
}

SolveResult solve_lp(const MilpModel& m, const SolverConfig& cfg) {
    require_valid_model(m);
    const auto start = Clock::now();
    SolveResult res;

    auto out = run_lp_double(m, nullptr, std::nullopt);
    res.lp_iterations = out.iterations;

    if (out.outcome == LpOutcome::Numerical ||
        (out.outcome == LpOutcome::Optimal && !verify_assignment(m, out.values, cfg.feasibility_tol))) {
        // exact-rational re-solve attempt
        auto exact = run_lp_exact(m, nullptr);
        res.lp_iterations += exact.iterations;
        if (exact.outcome == LpOutcome::Optimal) {
            res.status = SolveStatus::Optimal;
            res.values.clear();
            for (const auto& v : exact.values) res.values.push_back(detail::scalar_to_double(v));
            BigRational obj = detail::to_scalar(m.objective().constant, BigRational{});
            obj += m.objective().sense == Sense::Maximize ? -exact.internal_objective
                                                          : exact.internal_objective;
            res.objective = detail::scalar_to_double(obj);
            if (auto nr = detail::narrow_to_rational(obj)) res.objective_exact = *nr;
            res.best_bound = res.objective;
        } else if (exact.outcome == LpOutcome::Infeasible) {
            res.status = SolveStatus::Infeasible;
        } else if (exact.outcome == LpOutcome::Unbounded) {
            res.status = SolveStatus::Unbounded;
        } else {
            res.status = SolveStatus::NumericalError;
        }
        res.wall_time_seconds = std::chrono::duration<double>(Clock::now() - start).count();
        return res;
    }

    switch (out.outcome) {
        case LpOutcome::Optimal: {
            res.status = SolveStatus::Optimal;
            res.values = out.values;
            res.objective = objective_from_internal(m, out.internal_objective);
            res.best_bound = res.objective;
            if (cfg.certify_exact) certify(m, nullptr, res);
            break;
        }
        case LpOutcome::Infeasible: res.status = SolveStatus::Infeasible; break;
        case LpOutcome::Unbounded: res.status = SolveStatus::Unbounded; break;
        default: res.status = SolveStatus::NumericalError; break;
    }
    res.wall_time_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return res;
}

namespace {

struct BnbNode {
    std::vector<std::optional<int>> fixing;
    double parent_bound; // internal-minimization bound inherited from parent
    std::int64_t id;
};

// min-heap on bound; ties prefer the latest node
struct NodeOrder {
    bool operator()(const BnbNode& a, const BnbNode& b) const {
        if (a.parent_bound != b.parent_bound) return a.parent_bound > b.parent_bound;
        return a.id < b.id;
    }
};

} // namespace

SolveResult solve_milp(const MilpModel& m, const SolverConfig& cfg) {
    require_valid_model(m);
    const auto start = Clock::now();

    std::vector<int> binaries;
    for (int j = 0; j < m.var_count(); ++j) {
        if (m.variables()[static_cast<std::size_t>(j)].kind == VarKind::Binary) binaries.push_back(j);
    }
    if (binaries.empty()) {
        SolveResult res = solve_lp(m, cfg);
        res.node_count = 1;
        return res;
    }

    std::optional<Clock::time_point> deadline;
    if (cfg.time_limit_seconds < 1e17) {
        deadline = start + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(cfg.time_limit_seconds));
    }

    SolveResult res;
    const double kInf = std::numeric_limits<double>::infinity();

    bool have_incumbent = false;
    double incumbent_internal = kInf;
    std::vector<double> incumbent_values;
    std::vector<std::optional<int>> incumbent_fixing;

    bool hit_time = false, hit_nodes = false, saw_unbounded = false;

    std::priority_queue<BnbNode, std::vector<BnbNode>, NodeOrder> open;
    std::int64_t next_id = 0;
    open.push(BnbNode{std::vector<std::optional<int>>(static_cast<std::size_t>(m.var_count())),
                      -kInf, next_id++});

    // dive depth-first; on backtrack pick the open node with the best bound
    while (!open.empty()) {
        if (deadline && Clock::now() > *deadline) {
            hit_time = true;
            break;
        }
        if (res.node_count >= cfg.node_limit) {
            hit_nodes = true;
            break;
        }

        BnbNode node = std::move(const_cast<BnbNode&>(open.top()));
        open.pop();

        if (have_incumbent && node.parent_bound >= incumbent_internal - 1e-9) continue;

        // depth-first dive from this node
        std::vector<std::optional<int>> fixing = std::move(node.fixing);
        bool diving = true;
        while (diving) {
            if (deadline && Clock::now() > *deadline) {
                hit_time = true;
                break;
            }
            if (res.node_count >= cfg.node_limit) {
                hit_nodes = true;
                break;
            }

            ++res.node_count;
            auto lp = run_lp_double(m, &fixing, deadline);
            res.lp_iterations += lp.iterations;
            if (lp.outcome == LpOutcome::Interrupted) {
                hit_time = true;
                break;
            }
            if (lp.outcome == LpOutcome::Numerical) {
                auto exact = run_lp_exact(m, &fixing);
                res.lp_iterations += exact.iterations;
                if (exact.outcome == LpOutcome::Optimal) {
                    lp.outcome = LpOutcome::Optimal;
                    lp.values.clear();
                    for (const auto& v : exact.values) lp.values.push_back(detail::scalar_to_double(v));
                    lp.internal_objective = detail::scalar_to_double(exact.internal_objective);
                } else {
                    lp.outcome = exact.outcome;
                }
            }
            if (lp.outcome == LpOutcome::Unbounded) {
                saw_unbounded = true;
                diving = false;
                break;
            }
            if (lp.outcome != LpOutcome::Optimal) break; // infeasible or numerical: prune

            if (have_incumbent && lp.internal_objective >= incumbent_internal - 1e-9) break;

            // find branching candidate
            int branch_var = -1;
            double branch_frac = 0.0, best_score = -1.0;
            for (int j : binaries) {
                double v = lp.values[static_cast<std::size_t>(j)];
                double frac = v - std::floor(v);
                double dist = std::min(frac, 1.0 - frac);
                if (dist <= cfg.integrality_tol) continue;
                if (cfg.branching == BranchRule::FirstFractional) {
                    branch_var = j;
                    branch_frac = v;
                    break;
                }
                if (dist > best_score) {
                    best_score = dist;
                    branch_var = j;
                    branch_frac = v;
                }
            }

            if (branch_var < 0) {
                // integral: new incumbent
                if (!have_incumbent || lp.internal_objective < incumbent_internal - 1e-9) {
                    have_incumbent = true;
                    incumbent_internal = lp.internal_objective;
                    incumbent_values = lp.values;
                    incumbent_fixing = fixing;
                    for (int j : binaries) {
                        incumbent_fixing[static_cast<std::size_t>(j)] =
                            lp.values[static_cast<std::size_t>(j)] > 0.5 ? 1 : 0;
                    }
                }
                break;
            }

            // branch: dive into the rounding-preferred child, queue the other
            int first_child = branch_frac - std::floor(branch_frac) >= 0.5 ? 1 : 0;
            BnbNode other;
            other.fixing = fixing;
            other.fixing[static_cast<std::size_t>(branch_var)] = 1 - first_child;
            other.parent_bound = lp.internal_objective;
            other.id = next_id++;
            open.push(std::move(other));
            fixing[static_cast<std::size_t>(branch_var)] = first_child;
        }
        if (hit_time || hit_nodes) break;
        if (saw_unbounded) break;
    }

    // status + bounds
    double open_bound = open.empty() ? kInf : open.top().parent_bound;
    if (saw_unbounded) {
        res.status = SolveStatus::Unbounded;
    } else if (have_incumbent) {
        if (hit_time) {
            res.status = SolveStatus::FeasibleTimeLimit;
        } else if (hit_nodes) {
            res.status = SolveStatus::FeasibleNodeLimit;
        } else {
            res.status = SolveStatus::Optimal;
        }
        res.values = incumbent_values;
        res.objective = objective_from_internal(m, incumbent_internal);
        double bound_internal = (hit_time || hit_nodes)
                                    ? std::min(open_bound, incumbent_internal)
                                    : incumbent_internal;
        res.best_bound = objective_from_internal(m, bound_internal);
        if (res.status == SolveStatus::Optimal && cfg.certify_exact) {
            certify(m, &incumbent_fixing, res);
        }
    } else if (hit_time || hit_nodes) {
        // stopped before any feasible point was found
        res.status = hit_time ? SolveStatus::FeasibleTimeLimit : SolveStatus::FeasibleNodeLimit;
        res.best_bound = objective_from_internal(m, open_bound);
    } else {
        res.status = SolveStatus::Infeasible;
    }
    res.wall_time_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return res;
}

ExactLpResult solve_lp_exact(const MilpModel& m) {
    require_valid_model(m);
    auto out = run_lp_exact(m, nullptr);
    ExactLpResult res;
    switch (out.outcome) {
        case LpOutcome::Optimal: res.status = SolveStatus::Optimal; break;
        case LpOutcome::Infeasible: res.status = SolveStatus::Infeasible; break;
        case LpOutcome::Unbounded: res.status = SolveStatus::Unbounded; break;
        default: res.status = SolveStatus::NumericalError; break;
    }
    if (res.status != SolveStatus::Optimal) return res;

    const bool maximize = m.objective().sense == Sense::Maximize;
    BigRational obj = detail::to_scalar(m.objective().constant, BigRational{});
    obj += maximize ? -out.internal_objective : out.internal_objective;
    auto narrow = [&](const BigRational& v) {
        auto r = detail::narrow_to_rational(v);
        if (!r) throw std::overflow_error("exact LP value exceeds 64-bit rational");
        return *r;
    };
    res.objective = narrow(obj);
    for (const auto& v : out.values) res.values.push_back(narrow(v));
    for (const auto& y : out.duals) {
        res.row_duals.push_back(maximize ? -narrow(y) : narrow(y));
    }
    return res;
}

} // namespace robsel::milp
