#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "robsel/formulations.hpp"
#include "robsel/hiro.hpp"
#include "robsel/io.hpp"
#include "robsel/milp/solve.hpp"

namespace robsel {

using milp::MilpModel;
using milp::Relation;
using milp::Sense;
using milp::Term;

namespace {

Rational positive_part(const Rational& r) { return r.is_negative() ? Rational(0) : r; }

std::string idx(const std::string& s, int i) { return s + "[" + std::to_string(i) + "]"; }
std::string idx2(const std::string& s, int a, int b) {
    return s + "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

std::vector<int> add_perturbed(MilpModel& m, const std::string& name,
                               const PerturbationNeighborhood& nb) {
    std::vector<int> vars;
    for (std::size_t i = 0; i < nb.base().size(); ++i) {
        vars.push_back(m.add_continuous(name + "[" + std::to_string(static_cast<int>(i)) + "]",
                                        nb.lower_bound(i), nb.upper_bound(i)));
    }
    std::vector<Term> cap;
    for (int v : vars) cap.push_back({v, Rational(1)});
    m.add_constraint(std::move(cap), Relation::LessEqual, nb.sum_cap());
    return vars;
}

ProblemInstance permuted_instance(const ProblemInstance& inst, const std::vector<int>& perm) {
    ProblemInstance out = inst;
    const auto& u = inst.uncertainty.budgeted;
    for (std::size_t k = 0; k < perm.size(); ++k) {
        out.uncertainty.budgeted.lower[k] = u.lower[static_cast<std::size_t>(perm[k])];
        out.uncertainty.budgeted.deviation[k] = u.deviation[static_cast<std::size_t>(perm[k])];
    }
    return out;
}

// Clamp for a vector whose base is sorted non-decreasingly: after the plain
// clamp, a backward sweep lowers any entry above its successor. Lowering
// stays inside the boxes (the box lower bounds are monotone when the base
// is sorted) and can only help the sum cap.
CostVector clamp_keeping_order(const PerturbationNeighborhood& nb, const std::vector<double>& values) {
    CostVector out = nb.clamp(values);
    for (std::size_t k = out.size(); k-- > 1;) {
        if (out[k] < out[k - 1]) out[k - 1] = out[k];
    }
    return out;
}

} // namespace

ProblemInstance harden_budgeted(const ProblemInstance& input, const HiroConfig& cfg) {
    require_valid(input);
    if (input.criterion != Criterion::MinMax ||
        input.uncertainty.kind != UncertaintySet::Kind::Budgeted ||
        input.uncertainty.budgeted.mode == BudgetMode::VariableBudget) {
        throw std::invalid_argument("budgeted hardening needs a min-max item-budget instance");
    }
    if (cfg.mode != HiroMode::LowerBounds && cfg.mode != HiroMode::Deviations &&
        cfg.mode != HiroMode::Both) {
        throw std::invalid_argument("budgeted hardening needs mode lower_bounds, deviations or both");
    }
    if (cfg.b.is_zero()) return input; // singleton neighborhood

    const bool touch_dev = cfg.mode != HiroMode::LowerBounds;
    const bool touch_lower = cfg.mode != HiroMode::Deviations;

    // deviation modes require the items ordered by non-decreasing deviation
    ProblemInstance inst = input;
    std::vector<int> perm;
    if (touch_dev) {
        const auto& dev = input.uncertainty.budgeted.deviation;
        perm.resize(dev.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::stable_sort(perm.begin(), perm.end(),
                         [&](int a, int b) { return dev[static_cast<std::size_t>(a)] < dev[static_cast<std::size_t>(b)]; });
        bool identity = true;
        for (std::size_t k = 0; k < perm.size(); ++k) {
            if (perm[k] != static_cast<int>(k)) identity = false;
        }
        if (identity) {
            perm.clear();
        } else {
            inst = permuted_instance(input, perm);
        }
    }

    const auto& u = inst.uncertainty.budgeted;
    const int n = inst.n;
    const int p = inst.p;
    PerturbationNeighborhood lower_nb(u.lower, touch_lower ? cfg.b : Rational(0), cfg.c_max);
    PerturbationNeighborhood dev_nb(u.deviation, touch_dev ? cfg.b : Rational(0), cfg.c_max);

    MilpModel m;
    int t = m.add_continuous("t", std::nullopt, std::nullopt);
    std::vector<int> lower_vars, dev_vars;
    if (touch_lower) lower_vars = add_perturbed(m, "lo", lower_nb);
    if (touch_dev) dev_vars = add_perturbed(m, "d", dev_nb);

    auto lower_term = [&](std::vector<Term>& row, int i, const Rational& coef, Rational& rhs) {
        // contributes coef * lower_i to the row's right side
        if (touch_lower) {
            row.push_back({lower_vars[static_cast<std::size_t>(i)], -coef});
        } else {
            rhs += coef * u.lower[static_cast<std::size_t>(i)];
        }
    };

    if (!touch_dev) {
        // thresholds fixed by the unchanged deviations
        auto P = minmax_budgeted_breakpoints(u.deviation);
        for (int k = 0; k < P.size(); ++k) {
            const Rational& pi = P.values[static_cast<std::size_t>(k)];
            int alpha = m.add_continuous(idx("alpha", k), Rational(0), std::nullopt);
            std::vector<Term> trow{{t, Rational(1)}, {alpha, Rational(-p)}};
            Rational trhs = u.gamma * pi;
            for (int i = 0; i < n; ++i) {
                int beta = m.add_continuous(idx2("beta", k, i), Rational(0), std::nullopt);
                trow.push_back({beta, Rational(1)});
                // alpha - beta_i <= lower_i + [d_i - pi]_+
                std::vector<Term> dualrow{{alpha, Rational(1)}, {beta, Rational(-1)}};
                Rational rhs = positive_part(u.deviation[static_cast<std::size_t>(i)] - pi);
                lower_term(dualrow, i, Rational(1), rhs);
                m.add_constraint(std::move(dualrow), Relation::LessEqual, rhs);
            }
            m.add_constraint(std::move(trow), Relation::LessEqual, trhs);
        }
    } else {
        // thresholds tracked through the deviation variables; preserving the
        // input order keeps every [d_i - d_k]_+ term linear
        for (int i = 0; i + 1 < n; ++i) {
            m.add_constraint({{dev_vars[static_cast<std::size_t>(i)], Rational(1)},
                              {dev_vars[static_cast<std::size_t>(i + 1)], Rational(-1)}},
                             Relation::LessEqual, Rational(0));
        }
        for (int k = 0; k < n; ++k) {
            int alpha = m.add_continuous(idx("alpha", k), Rational(0), std::nullopt);
            std::vector<Term> trow{{t, Rational(1)},
                                   {alpha, Rational(-p)},
                                   {dev_vars[static_cast<std::size_t>(k)], -u.gamma}};
            for (int i = 0; i < n; ++i) {
                int beta = m.add_continuous(idx2("beta", k, i), Rational(0), std::nullopt);
                trow.push_back({beta, Rational(1)});
                // alpha - beta_i <= lower_i + (d_i - d_k when k < i)
                std::vector<Term> dualrow{{alpha, Rational(1)}, {beta, Rational(-1)}};
                Rational rhs(0);
                if (k < i) {
                    dualrow.push_back({dev_vars[static_cast<std::size_t>(i)], Rational(-1)});
                    dualrow.push_back({dev_vars[static_cast<std::size_t>(k)], Rational(1)});
                }
                lower_term(dualrow, i, Rational(1), rhs);
                m.add_constraint(std::move(dualrow), Relation::LessEqual, rhs);
            }
            m.add_constraint(std::move(trow), Relation::LessEqual, Rational(0));
        }
        // threshold zero block: plain selection on the upper bounds
        int alpha0 = m.add_continuous("alpha[z]", Rational(0), std::nullopt);
        std::vector<Term> trow{{t, Rational(1)}, {alpha0, Rational(-p)}};
        for (int i = 0; i < n; ++i) {
            int beta = m.add_continuous(idx2("beta", n, i), Rational(0), std::nullopt);
            trow.push_back({beta, Rational(1)});
            std::vector<Term> dualrow{{alpha0, Rational(1)},
                                      {beta, Rational(-1)},
                                      {dev_vars[static_cast<std::size_t>(i)], Rational(-1)}};
            Rational rhs(0);
            lower_term(dualrow, i, Rational(1), rhs);
            m.add_constraint(std::move(dualrow), Relation::LessEqual, rhs);
        }
        m.add_constraint(std::move(trow), Relation::LessEqual, Rational(0));
    }

    m.set_objective({{t, Rational(1)}}, Sense::Maximize);

    milp::SolverConfig scfg = cfg.solver;
    scfg.time_limit_seconds = std::min(scfg.time_limit_seconds, cfg.time_limit_seconds);
    auto result = milp::solve_lp(m, scfg);
    if (result.status != milp::SolveStatus::Optimal) {
        return input; // leave the instance untouched when the model fails
    }

    ProblemInstance hardened = inst;
    if (touch_lower) {
        std::vector<double> vals;
        for (int v : lower_vars) vals.push_back(result.values[static_cast<std::size_t>(v)]);
        hardened.uncertainty.budgeted.lower = lower_nb.clamp(vals);
    }
    if (touch_dev) {
        std::vector<double> vals;
        for (int v : dev_vars) vals.push_back(result.values[static_cast<std::size_t>(v)]);
        hardened.uncertainty.budgeted.deviation = clamp_keeping_order(dev_nb, vals);
    }

    // keep whichever instance is exactly harder
    Rational before = solve_minmax_budgeted_enumeration(inst).second;
    Rational after = solve_minmax_budgeted_enumeration(hardened).second;
    ProblemInstance out = after < before ? input : hardened;
    if (canonical_bytes(out) != canonical_bytes(input)) {
        HiroLineage lineage;
        lineage.parent_hash = content_hash(canonical_bytes(input));
        lineage.b = cfg.b;
        lineage.mode = to_string(cfg.mode);
        lineage.iterations = 1;
        lineage.permutation = perm;
        out.provenance.hiro = std::move(lineage);
    }
    return out;
}

ProblemInstance harden_regret_interval(const ProblemInstance& input, const HiroConfig& cfg) {
    require_valid(input);
    if (input.criterion != Criterion::MinMaxRegret ||
        input.uncertainty.kind != UncertaintySet::Kind::Interval) {
        throw std::invalid_argument("interval hardening needs a min-max regret interval instance");
    }
    if (cfg.b.is_zero()) return input; // singleton neighborhood
    const auto& u = input.uncertainty.interval;
    const int n = input.n;
    const int p = input.p;

    PerturbationNeighborhood lower_nb(u.lower, cfg.b, cfg.c_max);
    PerturbationNeighborhood dev_nb(u.deviation, cfg.b, cfg.c_max);
    auto P = regret_interval_breakpoints(u.lower, u.deviation);
    const int K = P.size();

    MilpModel m;
    int t = m.add_continuous("t", std::nullopt, std::nullopt);
    auto lower_vars = add_perturbed(m, "lo", lower_nb);
    auto dev_vars = add_perturbed(m, "d", dev_nb);

    for (int k = 0; k < K; ++k) {
        const Rational& pi = P.values[static_cast<std::size_t>(k)];
        int alpha = m.add_continuous(idx("alpha", k), Rational(0), std::nullopt);
        std::vector<Term> trow{{t, Rational(1)}, {alpha, Rational(-p)}};
        for (int i = 0; i < n; ++i) {
            // big-M constants: largest reachable lower bound / deviation
            const Rational Mc = lower_nb.upper_bound(static_cast<std::size_t>(i));
            const Rational Md = dev_nb.upper_bound(static_cast<std::size_t>(i));

            int z = m.add_binary(idx2("z", k, i));
            int zhat = m.add_continuous(idx2("zhat", k, i), Rational(0), std::nullopt);
            int q = m.add_binary(idx2("q", k, i));
            int qhat = m.add_continuous(idx2("qhat", k, i), Rational(0), std::nullopt);
            int qtil = m.add_continuous(idx2("qtil", k, i), Rational(0), std::nullopt);
            int s = m.add_continuous(idx2("s", k, i), Rational(0), std::nullopt);
            int beta = m.add_continuous(idx2("beta", k, i), Rational(0), std::nullopt);

            // t-row pieces: + (z pi - zhat) per item
            trow.push_back({z, -pi});
            trow.push_back({zhat, Rational(1)});
            trow.push_back({beta, Rational(1)});

            // alpha - beta <= lower + dev + pi q - qhat - qtil - s
            m.add_constraint({{alpha, Rational(1)},
                              {beta, Rational(-1)},
                              {lower_vars[static_cast<std::size_t>(i)], Rational(-1)},
                              {dev_vars[static_cast<std::size_t>(i)], Rational(-1)},
                              {q, -pi},
                              {qhat, Rational(1)},
                              {qtil, Rational(1)},
                              {s, Rational(1)}},
                             Relation::LessEqual, Rational(0));
            // s >= pi - lower
            m.add_constraint({{s, Rational(1)}, {lower_vars[static_cast<std::size_t>(i)], Rational(1)}},
                             Relation::GreaterEqual, pi);
            // zhat >= lower - Mc (1 - z)
            m.add_constraint({{zhat, Rational(1)},
                              {lower_vars[static_cast<std::size_t>(i)], Rational(-1)},
                              {z, -Mc}},
                             Relation::GreaterEqual, -Mc);
            // qhat >= lower - Mc (1 - q)
            m.add_constraint({{qhat, Rational(1)},
                              {lower_vars[static_cast<std::size_t>(i)], Rational(-1)},
                              {q, -Mc}},
                             Relation::GreaterEqual, -Mc);
            // qtil >= dev - Md (1 - q); bounds the deviation part of the
            // indicator product (the published row names the lower bound
            // here, which cannot be the intended quantity)
            m.add_constraint({{qtil, Rational(1)},
                              {dev_vars[static_cast<std::size_t>(i)], Rational(-1)},
                              {q, -Md}},
                             Relation::GreaterEqual, -Md);
        }
        m.add_constraint(std::move(trow), Relation::LessEqual, Rational(-Rational(p) * pi));
    }

    m.set_objective({{t, Rational(1)}}, Sense::Maximize);

    milp::SolverConfig scfg = cfg.solver;
    scfg.time_limit_seconds = std::min(scfg.time_limit_seconds, cfg.time_limit_seconds);
    auto result = milp::solve_milp(m, scfg);
    if (!result.has_solution()) return input;

    ProblemInstance hardened = input;
    {
        std::vector<double> vals;
        for (int v : lower_vars) vals.push_back(result.values[static_cast<std::size_t>(v)]);
        hardened.uncertainty.interval.lower = lower_nb.clamp(vals);
    }
    {
        std::vector<double> vals;
        for (int v : dev_vars) vals.push_back(result.values[static_cast<std::size_t>(v)]);
        hardened.uncertainty.interval.deviation = dev_nb.clamp(vals);
    }

    Rational before = solve_regret_interval_enumeration(input).second;
    Rational after = solve_regret_interval_enumeration(hardened).second;
    ProblemInstance out = after < before ? input : hardened;
    if (canonical_bytes(out) != canonical_bytes(input)) {
        HiroLineage lineage;
        lineage.parent_hash = content_hash(canonical_bytes(input));
        lineage.b = cfg.b;
        lineage.mode = "interval";
        lineage.iterations = 1;
        lineage.note = "indicator-product row bounds the deviation (adjusted constant)";
        out.provenance.hiro = std::move(lineage);
    }
    return out;
}

} // namespace robsel
