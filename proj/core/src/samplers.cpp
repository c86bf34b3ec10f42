#include "robsel/samplers.hpp"

#include <stdexcept>

#include "robsel/rng.hpp"

namespace robsel {

namespace {

const char* family_str(GeneratorFamily f) {
    switch (f) {
        case GeneratorFamily::MM_D: return "MM-D";
        case GeneratorFamily::MM_B: return "MM-B";
        case GeneratorFamily::MMR_I: return "MMR-I";
        case GeneratorFamily::MMR_D: return "MMR-D";
        case GeneratorFamily::TST_D: return "2ST-D";
        case GeneratorFamily::TST_DB: return "2ST-DB";
        case GeneratorFamily::TST_CB: return "2ST-CB";
        case GeneratorFamily::RR_D: return "RR-D";
        case GeneratorFamily::RR_DB: return "RR-DB";
        case GeneratorFamily::RR_CB: return "RR-CB";
    }
    return "?";
}

const char* variant_str(GeneratorVariant v) {
    switch (v) {
        case GeneratorVariant::U: return "U";
        case GeneratorVariant::V1: return "1";
        case GeneratorVariant::V2: return "2";
    }
    return "?";
}

Rational draw(SplitMix64& rng, std::int64_t lo, std::int64_t hi) {
    return Rational(rng.uniform_int(lo, hi));
}

// Uniform cost rows in {1..100} per scenario substream.
std::vector<CostVector> discrete_uniform_rows(std::uint64_t seed, int n, int N) {
    std::vector<CostVector> rows;
    for (int j = 1; j <= N; ++j) {
        auto rng = substream(seed, static_cast<std::uint64_t>(j));
        CostVector row(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) row[static_cast<std::size_t>(i)] = draw(rng, 1, 100);
        rows.push_back(std::move(row));
    }
    return rows;
}

// Bimodal rows: each value small {1..10} or large {91..100} by a fair coin.
std::vector<CostVector> discrete_bimodal_rows(std::uint64_t seed, int n, int N) {
    std::vector<CostVector> rows;
    for (int j = 1; j <= N; ++j) {
        auto rng = substream(seed, static_cast<std::uint64_t>(j));
        CostVector row(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            bool small = rng.uniform_int(0, 1) == 0;
            row[static_cast<std::size_t>(i)] = small ? draw(rng, 1, 10) : draw(rng, 91, 100);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// Mirrored rows: the first floor(n/2) items are uniform, every later item i
// is 100 minus item i - floor(n/2), filled in index order.
std::vector<CostVector> discrete_mirrored_rows(std::uint64_t seed, int n, int N) {
    const int half = n / 2;
    std::vector<CostVector> rows;
    for (int j = 1; j <= N; ++j) {
        auto rng = substream(seed, static_cast<std::uint64_t>(j));
        CostVector row(static_cast<std::size_t>(n));
        for (int i = 0; i < half; ++i) row[static_cast<std::size_t>(i)] = draw(rng, 1, 100);
        for (int i = half; i < n; ++i) {
            row[static_cast<std::size_t>(i)] = Rational(100) - row[static_cast<std::size_t>(i - half)];
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// First-stage and per-scenario costs of the two-stage/recoverable discrete
// "mixture" recipes.
struct StageCosts {
    CostVector first_stage;
    std::vector<CostVector> scenarios;
};

StageCosts stage_costs_uniform(std::uint64_t seed, int n, int N) {
    StageCosts out;
    auto rng0 = substream(seed, 0);
    out.first_stage.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.first_stage[static_cast<std::size_t>(i)] = draw(rng0, 1, 100);
    out.scenarios = discrete_uniform_rows(seed, n, N);
    return out;
}

StageCosts stage_costs_variant1(std::uint64_t seed, int n, int N) {
    StageCosts out;
    auto rng0 = substream(seed, 0);
    out.first_stage.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        bool narrow = rng0.uniform_int(0, 1) == 0;
        out.first_stage[static_cast<std::size_t>(i)] = narrow ? draw(rng0, 45, 55) : draw(rng0, 25, 75);
    }
    for (int j = 1; j <= N; ++j) {
        auto rng = substream(seed, static_cast<std::uint64_t>(j));
        CostVector row(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            std::int64_t branch = rng.uniform_int(0, 3); // 0,1: near first stage; 2: low; 3: high
            std::int64_t ci = out.first_stage[static_cast<std::size_t>(i)].num();
            if (branch <= 1) {
                row[static_cast<std::size_t>(i)] = draw(rng, ci - 5, ci + 5);
            } else if (branch == 2) {
                row[static_cast<std::size_t>(i)] = draw(rng, 1, 10);
            } else {
                row[static_cast<std::size_t>(i)] = draw(rng, 91, 100);
            }
        }
        out.scenarios.push_back(std::move(row));
    }
    return out;
}

StageCosts stage_costs_variant2(std::uint64_t seed, int n, int N) {
    StageCosts out;
    auto rng0 = substream(seed, 0);
    out.first_stage.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        bool uniform = rng0.uniform_int(0, 1) == 0;
        out.first_stage[static_cast<std::size_t>(i)] = uniform ? draw(rng0, 1, 100) : Rational(50);
    }
    for (int j = 1; j <= N; ++j) {
        auto rng = substream(seed, static_cast<std::uint64_t>(j));
        CostVector row(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            std::int64_t ci = out.first_stage[static_cast<std::size_t>(i)].num();
            if (ci == 50) {
                bool low = rng.uniform_int(0, 1) == 0;
                row[static_cast<std::size_t>(i)] = low ? draw(rng, 1, 10) : draw(rng, 91, 100);
            } else {
                std::int64_t v = rng.uniform_int(ci - 5, ci + 5);
                if (v < 0) v = 0; // negative draws are clamped to zero
                row[static_cast<std::size_t>(i)] = Rational(v);
            }
        }
        out.scenarios.push_back(std::move(row));
    }
    return out;
}

// Budgeted lower/deviation pairs for the two-stage/recoverable budgeted
// recipes (shared across the -DB and -CB families).
struct BudgetCosts {
    CostVector first_stage;
    CostVector lower;
    CostVector deviation;
};

BudgetCosts budget_costs(std::uint64_t seed, int n, GeneratorVariant variant) {
    BudgetCosts out;
    auto rng0 = substream(seed, 0);
    auto rng1 = substream(seed, 1);
    auto rng2 = substream(seed, 2);
    out.first_stage.resize(static_cast<std::size_t>(n));
    out.lower.resize(static_cast<std::size_t>(n));
    out.deviation.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.first_stage[static_cast<std::size_t>(i)] = draw(rng0, 1, 100);
    switch (variant) {
        case GeneratorVariant::U:
            for (int i = 0; i < n; ++i) out.lower[static_cast<std::size_t>(i)] = draw(rng1, 1, 100);
            for (int i = 0; i < n; ++i) out.deviation[static_cast<std::size_t>(i)] = draw(rng2, 1, 100);
            break;
        case GeneratorVariant::V1:
            for (int i = 0; i < n; ++i) out.lower[static_cast<std::size_t>(i)] = draw(rng1, 1, 10);
            for (int i = 0; i < n; ++i) {
                out.deviation[static_cast<std::size_t>(i)] =
                    draw(rng2, 100 - out.lower[static_cast<std::size_t>(i)].num(), 100);
            }
            break;
        case GeneratorVariant::V2:
            for (int i = 0; i < n; ++i) {
                out.lower[static_cast<std::size_t>(i)] =
                    Rational(100) - out.first_stage[static_cast<std::size_t>(i)];
            }
            for (int i = 0; i < n; ++i) {
                out.deviation[static_cast<std::size_t>(i)] =
                    draw(rng2, out.lower[static_cast<std::size_t>(i)].num(), 100);
            }
            break;
    }
    return out;
}

bool between(const Rational& v, std::int64_t lo, std::int64_t hi) {
    return Rational(lo) <= v && v <= Rational(hi);
}

} // namespace

std::string GeneratorId::str() const {
    return std::string(family_str(family)) + "-" + variant_str(variant);
}

std::optional<GeneratorId> GeneratorId::parse(const std::string& text) {
    for (const auto& g : generator_catalog()) {
        if (g.str() == text) return g;
    }
    return std::nullopt;
}

Criterion GeneratorId::criterion() const {
    switch (family) {
        case GeneratorFamily::MM_D:
        case GeneratorFamily::MM_B: return Criterion::MinMax;
        case GeneratorFamily::MMR_I:
        case GeneratorFamily::MMR_D: return Criterion::MinMaxRegret;
        case GeneratorFamily::TST_D:
        case GeneratorFamily::TST_DB:
        case GeneratorFamily::TST_CB: return Criterion::TwoStage;
        case GeneratorFamily::RR_D:
        case GeneratorFamily::RR_DB:
        case GeneratorFamily::RR_CB: return Criterion::Recoverable;
    }
    throw std::logic_error("unknown family");
}

bool GeneratorId::uses_discrete_set() const {
    return family == GeneratorFamily::MM_D || family == GeneratorFamily::MMR_D ||
           family == GeneratorFamily::TST_D || family == GeneratorFamily::RR_D;
}

bool GeneratorId::uses_interval_set() const { return family == GeneratorFamily::MMR_I; }

bool GeneratorId::uses_budgeted_set() const {
    return family == GeneratorFamily::MM_B || family == GeneratorFamily::TST_DB ||
           family == GeneratorFamily::TST_CB || family == GeneratorFamily::RR_DB ||
           family == GeneratorFamily::RR_CB;
}

bool GeneratorId::needs_first_stage() const {
    return criterion() == Criterion::TwoStage || criterion() == Criterion::Recoverable;
}

bool GeneratorId::needs_delta() const { return criterion() == Criterion::Recoverable; }

BudgetMode GeneratorId::default_budget_mode() const {
    switch (family) {
        case GeneratorFamily::MM_B: return BudgetMode::ContinuousItems;
        case GeneratorFamily::TST_DB:
        case GeneratorFamily::RR_DB: return BudgetMode::DiscreteItems;
        case GeneratorFamily::TST_CB:
        case GeneratorFamily::RR_CB: return BudgetMode::VariableBudget;
        default: throw std::logic_error("family has no budget mode");
    }
}

DeltaSemantics GeneratorId::default_delta_semantics() const {
    // the discrete model reads delta as a minimum kept count, the budgeted
    // formulations read it as a maximum exchange count
    return family == GeneratorFamily::RR_D ? DeltaSemantics::KeptAtLeast
                                           : DeltaSemantics::ChangedAtMost;
}

const std::vector<GeneratorId>& generator_catalog() {
    static const std::vector<GeneratorId> catalog = [] {
        std::vector<GeneratorId> out;
        for (auto f : {GeneratorFamily::MM_D, GeneratorFamily::MM_B, GeneratorFamily::MMR_I,
                       GeneratorFamily::MMR_D, GeneratorFamily::TST_D, GeneratorFamily::TST_DB,
                       GeneratorFamily::TST_CB, GeneratorFamily::RR_D, GeneratorFamily::RR_DB,
                       GeneratorFamily::RR_CB}) {
            for (auto v : {GeneratorVariant::U, GeneratorVariant::V1, GeneratorVariant::V2}) {
                out.push_back(GeneratorId{f, v});
            }
        }
        return out;
    }();
    return catalog;
}

std::vector<GeneratorInfo> generator_info() {
    std::vector<GeneratorInfo> out;
    for (const auto& g : generator_catalog()) {
        GeneratorInfo info;
        info.id = g;
        std::string params = "n, p, seed";
        if (g.uses_discrete_set()) params += ", N";
        if (g.uses_budgeted_set()) params += ", gamma";
        if (g.needs_delta()) params += ", delta";
        info.required_params = params;
        switch (g.family) {
            case GeneratorFamily::MM_D:
            case GeneratorFamily::MMR_D:
                info.invariants = g.variant == GeneratorVariant::U   ? "costs in {1..100}"
                                  : g.variant == GeneratorVariant::V1 ? "costs in {1..10} or {91..100}"
                                                                      : "mirrored halves summing to 100";
                break;
            case GeneratorFamily::MM_B:
                info.invariants = g.variant == GeneratorVariant::U   ? "lower, dev in {1..100}"
                                  : g.variant == GeneratorVariant::V1 ? "lower + dev = 100"
                                                                      : "lower in {1..10}, dev in {99-lower..100}";
                break;
            case GeneratorFamily::MMR_I:
                info.invariants = g.variant == GeneratorVariant::U
                                      ? "lower, dev in {1..100}"
                                      : (g.variant == GeneratorVariant::V1
                                             ? "low lower with high dev or vice versa"
                                             : "lower and dev both low or both high");
                break;
            case GeneratorFamily::TST_D:
            case GeneratorFamily::RR_D:
                info.invariants = g.variant == GeneratorVariant::U
                                      ? "all costs in {1..100}"
                                      : "scenario costs mixture around first-stage costs";
                break;
            default:
                info.invariants = g.variant == GeneratorVariant::U   ? "all values in {1..100}"
                                  : g.variant == GeneratorVariant::V1 ? "lower in {1..10}, dev in {100-lower..100}"
                                                                      : "lower = 100 - first stage, dev in {lower..100}";
                break;
        }
        out.push_back(std::move(info));
    }
    return out;
}

ProblemInstance sample_instance(const GeneratorId& g, const ShapeParams& sp) {
    if (sp.n <= 0 || sp.p < 1 || sp.p > sp.n) throw std::invalid_argument("invalid n/p shape");
    if (g.uses_discrete_set() && sp.N < 1) throw std::invalid_argument("discrete generator needs N >= 1");
    if (!g.uses_discrete_set() && sp.N != 0) throw std::invalid_argument("N only valid for discrete generators");
    if (g.uses_budgeted_set()) {
        if (sp.gamma.is_negative()) throw std::invalid_argument("gamma must be non-negative");
    } else if (!sp.gamma.is_zero()) {
        throw std::invalid_argument("gamma only valid for budgeted generators");
    }
    if (g.needs_delta() != sp.delta.has_value()) {
        throw std::invalid_argument(g.needs_delta() ? "recoverable generator needs delta"
                                                    : "delta only valid for recoverable generators");
    }
    if (sp.budget_mode && g.family != GeneratorFamily::MM_B) {
        throw std::invalid_argument("budget mode override only valid for MM-B");
    }

    ProblemInstance inst;
    inst.n = sp.n;
    inst.p = sp.p;
    inst.criterion = g.criterion();
    inst.provenance.generator = g.str();
    inst.provenance.seed = sp.seed;
    if (g.needs_delta()) {
        inst.delta = sp.delta;
        inst.delta_semantics = sp.delta_semantics.value_or(g.default_delta_semantics());
    }

    switch (g.family) {
        case GeneratorFamily::MM_D:
        case GeneratorFamily::MMR_D: {
            std::vector<CostVector> rows;
            if (g.variant == GeneratorVariant::U) rows = discrete_uniform_rows(sp.seed, sp.n, sp.N);
            else if (g.variant == GeneratorVariant::V1) rows = discrete_bimodal_rows(sp.seed, sp.n, sp.N);
            else rows = discrete_mirrored_rows(sp.seed, sp.n, sp.N);
            inst.uncertainty = UncertaintySet::make_discrete(std::move(rows));
            break;
        }
        case GeneratorFamily::MM_B: {
            auto rng1 = substream(sp.seed, 1);
            auto rng2 = substream(sp.seed, 2);
            CostVector lower(static_cast<std::size_t>(sp.n)), dev(static_cast<std::size_t>(sp.n));
            switch (g.variant) {
                case GeneratorVariant::U:
                    for (int i = 0; i < sp.n; ++i) lower[static_cast<std::size_t>(i)] = draw(rng1, 1, 100);
                    for (int i = 0; i < sp.n; ++i) dev[static_cast<std::size_t>(i)] = draw(rng2, 1, 100);
                    break;
                case GeneratorVariant::V1:
                    for (int i = 0; i < sp.n; ++i) lower[static_cast<std::size_t>(i)] = draw(rng1, 1, 100);
                    for (int i = 0; i < sp.n; ++i) {
                        dev[static_cast<std::size_t>(i)] = Rational(100) - lower[static_cast<std::size_t>(i)];
                    }
                    break;
                case GeneratorVariant::V2:
                    // deviations from {100 - lower - 1 .. 100}, as published
                    for (int i = 0; i < sp.n; ++i) lower[static_cast<std::size_t>(i)] = draw(rng1, 1, 10);
                    for (int i = 0; i < sp.n; ++i) {
                        dev[static_cast<std::size_t>(i)] =
                            draw(rng2, 100 - lower[static_cast<std::size_t>(i)].num() - 1, 100);
                    }
                    break;
            }
            inst.uncertainty = UncertaintySet::make_budgeted(
                std::move(lower), std::move(dev), sp.gamma,
                sp.budget_mode.value_or(g.default_budget_mode()));
            break;
        }
        case GeneratorFamily::MMR_I: {
            CostVector lower(static_cast<std::size_t>(sp.n)), dev(static_cast<std::size_t>(sp.n));
            if (g.variant == GeneratorVariant::U) {
                auto rng1 = substream(sp.seed, 1);
                auto rng2 = substream(sp.seed, 2);
                for (int i = 0; i < sp.n; ++i) lower[static_cast<std::size_t>(i)] = draw(rng1, 1, 100);
                for (int i = 0; i < sp.n; ++i) dev[static_cast<std::size_t>(i)] = draw(rng2, 1, 100);
            } else {
                // coupled per-item draws share one stream: coin, lower, dev
                auto rng = substream(sp.seed, 1);
                for (int i = 0; i < sp.n; ++i) {
                    bool flip = rng.uniform_int(0, 1) == 0;
                    if (g.variant == GeneratorVariant::V1) {
                        if (flip) {
                            lower[static_cast<std::size_t>(i)] = draw(rng, 1, 10);
                            dev[static_cast<std::size_t>(i)] = draw(rng, 91, 100);
                        } else {
                            lower[static_cast<std::size_t>(i)] = draw(rng, 91, 100);
                            dev[static_cast<std::size_t>(i)] = draw(rng, 1, 10);
                        }
                    } else {
                        if (flip) {
                            lower[static_cast<std::size_t>(i)] = draw(rng, 1, 10);
                            dev[static_cast<std::size_t>(i)] = draw(rng, 1, 10);
                        } else {
                            lower[static_cast<std::size_t>(i)] = draw(rng, 91, 100);
                            dev[static_cast<std::size_t>(i)] = draw(rng, 91, 100);
                        }
                    }
                }
            }
            inst.uncertainty = UncertaintySet::make_interval(std::move(lower), std::move(dev));
            break;
        }
        case GeneratorFamily::TST_D:
        case GeneratorFamily::RR_D: {
            StageCosts sc;
            if (g.variant == GeneratorVariant::U) sc = stage_costs_uniform(sp.seed, sp.n, sp.N);
            else if (g.variant == GeneratorVariant::V1) sc = stage_costs_variant1(sp.seed, sp.n, sp.N);
            else sc = stage_costs_variant2(sp.seed, sp.n, sp.N);
            inst.first_stage_costs = std::move(sc.first_stage);
            inst.uncertainty = UncertaintySet::make_discrete(std::move(sc.scenarios));
            break;
        }
        case GeneratorFamily::TST_DB:
        case GeneratorFamily::TST_CB:
        case GeneratorFamily::RR_DB:
        case GeneratorFamily::RR_CB: {
            auto bc = budget_costs(sp.seed, sp.n, g.variant);
            inst.first_stage_costs = std::move(bc.first_stage);
            inst.uncertainty = UncertaintySet::make_budgeted(std::move(bc.lower), std::move(bc.deviation),
                                                             sp.gamma, g.default_budget_mode());
            break;
        }
    }
    require_valid(inst);
    return inst;
}

std::vector<std::string> check_sampler_invariants(const ProblemInstance& inst) {
    std::vector<std::string> violations;
    auto gid = GeneratorId::parse(inst.provenance.generator);
    if (!gid) {
        violations.push_back("provenance does not name a known generator: " + inst.provenance.generator);
        return violations;
    }
    auto bad = [&](const std::string& msg) { violations.push_back(msg); };
    const int n = inst.n;

    auto range_all = [&](const CostVector& v, std::int64_t lo, std::int64_t hi, const std::string& name) {
        for (int i = 0; i < n; ++i) {
            if (!between(v[static_cast<std::size_t>(i)], lo, hi)) {
                bad(name + "[" + std::to_string(i) + "] outside {" + std::to_string(lo) + ".." +
                    std::to_string(hi) + "}");
            }
        }
    };
    auto bimodal_all = [&](const CostVector& v, const std::string& name) {
        for (int i = 0; i < n; ++i) {
            const auto& x = v[static_cast<std::size_t>(i)];
            if (!(between(x, 1, 10) || between(x, 91, 100))) {
                bad(name + "[" + std::to_string(i) + "] outside {1..10} u {91..100}");
            }
        }
    };

    switch (gid->family) {
        case GeneratorFamily::MM_D:
        case GeneratorFamily::MMR_D: {
            const auto& rows = inst.uncertainty.discrete.scenarios;
            for (std::size_t j = 0; j < rows.size(); ++j) {
                const std::string name = "scenario " + std::to_string(j + 1);
                if (gid->variant == GeneratorVariant::U) {
                    range_all(rows[j], 1, 100, name);
                } else if (gid->variant == GeneratorVariant::V1) {
                    bimodal_all(rows[j], name);
                } else {
                    const int half = n / 2;
                    for (int i = 0; i < half; ++i) {
                        if (!between(rows[j][static_cast<std::size_t>(i)], 1, 100)) {
                            bad(name + " first half outside {1..100}");
                        }
                    }
                    for (int i = half; i < n; ++i) {
                        if (rows[j][static_cast<std::size_t>(i)] !=
                            Rational(100) - rows[j][static_cast<std::size_t>(i - half)]) {
                            bad(name + " symmetry violated at item " + std::to_string(i));
                        }
                    }
                }
            }
            break;
        }
        case GeneratorFamily::MM_B: {
            const auto& u = inst.uncertainty.budgeted;
            if (gid->variant == GeneratorVariant::U) {
                range_all(u.lower, 1, 100, "lower");
                range_all(u.deviation, 1, 100, "deviation");
            } else if (gid->variant == GeneratorVariant::V1) {
                range_all(u.lower, 1, 100, "lower");
                for (int i = 0; i < n; ++i) {
                    if (u.lower[static_cast<std::size_t>(i)] + u.deviation[static_cast<std::size_t>(i)] !=
                        Rational(100)) {
                        bad("complement violated: lower + deviation != 100 at item " + std::to_string(i));
                    }
                }
            } else {
                range_all(u.lower, 1, 10, "lower");
                for (int i = 0; i < n; ++i) {
                    std::int64_t lo = 100 - u.lower[static_cast<std::size_t>(i)].num() - 1;
                    if (!between(u.deviation[static_cast<std::size_t>(i)], lo, 100)) {
                        bad("deviation outside {" + std::to_string(lo) + "..100} at item " + std::to_string(i));
                    }
                }
            }
            break;
        }
        case GeneratorFamily::MMR_I: {
            const auto& u = inst.uncertainty.interval;
            if (gid->variant == GeneratorVariant::U) {
                range_all(u.lower, 1, 100, "lower");
                range_all(u.deviation, 1, 100, "deviation");
            } else if (gid->variant == GeneratorVariant::V1) {
                for (int i = 0; i < n; ++i) {
                    bool low_high = between(u.lower[static_cast<std::size_t>(i)], 1, 10) &&
                                    between(u.deviation[static_cast<std::size_t>(i)], 91, 100);
                    bool high_low = between(u.lower[static_cast<std::size_t>(i)], 91, 100) &&
                                    between(u.deviation[static_cast<std::size_t>(i)], 1, 10);
                    if (!low_high && !high_low) bad("item " + std::to_string(i) + " not anti-correlated");
                }
            } else {
                for (int i = 0; i < n; ++i) {
                    bool both_low = between(u.lower[static_cast<std::size_t>(i)], 1, 10) &&
                                    between(u.deviation[static_cast<std::size_t>(i)], 1, 10);
                    bool both_high = between(u.lower[static_cast<std::size_t>(i)], 91, 100) &&
                                     between(u.deviation[static_cast<std::size_t>(i)], 91, 100);
                    if (!both_low && !both_high) bad("item " + std::to_string(i) + " not correlated");
                }
            }
            break;
        }
        case GeneratorFamily::TST_D:
        case GeneratorFamily::RR_D: {
            const auto& C = *inst.first_stage_costs;
            const auto& rows = inst.uncertainty.discrete.scenarios;
            if (gid->variant == GeneratorVariant::U) {
                range_all(C, 1, 100, "first-stage");
                for (std::size_t j = 0; j < rows.size(); ++j) {
                    range_all(rows[j], 1, 100, "scenario " + std::to_string(j + 1));
                }
            } else if (gid->variant == GeneratorVariant::V1) {
                range_all(C, 25, 75, "first-stage");
                for (std::size_t j = 0; j < rows.size(); ++j) {
                    for (int i = 0; i < n; ++i) {
                        std::int64_t ci = C[static_cast<std::size_t>(i)].num();
                        const auto& v = rows[j][static_cast<std::size_t>(i)];
                        if (!(between(v, ci - 5, ci + 5) || between(v, 1, 10) || between(v, 91, 100))) {
                            bad("scenario value outside mixture ranges at item " + std::to_string(i));
                        }
                    }
                }
            } else {
                range_all(C, 1, 100, "first-stage");
                for (std::size_t j = 0; j < rows.size(); ++j) {
                    for (int i = 0; i < n; ++i) {
                        std::int64_t ci = C[static_cast<std::size_t>(i)].num();
                        const auto& v = rows[j][static_cast<std::size_t>(i)];
                        if (ci == 50) {
                            if (!(between(v, 1, 10) || between(v, 91, 100))) {
                                bad("scenario value outside bimodal ranges at item " + std::to_string(i));
                            }
                        } else if (!between(v, std::max<std::int64_t>(0, ci - 5), ci + 5)) {
                            bad("scenario value outside clamp range at item " + std::to_string(i));
                        }
                    }
                }
            }
            break;
        }
        case GeneratorFamily::TST_DB:
        case GeneratorFamily::TST_CB:
        case GeneratorFamily::RR_DB:
        case GeneratorFamily::RR_CB: {
            const auto& C = *inst.first_stage_costs;
            const auto& u = inst.uncertainty.budgeted;
            range_all(C, 1, 100, "first-stage");
            if (gid->variant == GeneratorVariant::U) {
                range_all(u.lower, 1, 100, "lower");
                range_all(u.deviation, 1, 100, "deviation");
            } else if (gid->variant == GeneratorVariant::V1) {
                range_all(u.lower, 1, 10, "lower");
                for (int i = 0; i < n; ++i) {
                    std::int64_t lo = 100 - u.lower[static_cast<std::size_t>(i)].num();
                    if (!between(u.deviation[static_cast<std::size_t>(i)], lo, 100)) {
                        bad("deviation outside {" + std::to_string(lo) + "..100} at item " + std::to_string(i));
                    }
                }
            } else {
                for (int i = 0; i < n; ++i) {
                    if (u.lower[static_cast<std::size_t>(i)] !=
                        Rational(100) - C[static_cast<std::size_t>(i)]) {
                        bad("complement violated: lower != 100 - first-stage at item " + std::to_string(i));
                    }
                    std::int64_t lo = u.lower[static_cast<std::size_t>(i)].num();
                    if (!between(u.deviation[static_cast<std::size_t>(i)], lo, 100)) {
                        bad("deviation outside {lower..100} at item " + std::to_string(i));
                    }
                }
            }
            break;
        }
    }
    return violations;
}

} // namespace robsel
