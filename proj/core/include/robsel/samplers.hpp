#ifndef ROBSEL_SAMPLERS_HPP
#define ROBSEL_SAMPLERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "robsel/instance.hpp"

namespace robsel {

enum class GeneratorFamily { MM_D, MM_B, MMR_I, MMR_D, TST_D, TST_DB, TST_CB, RR_D, RR_DB, RR_CB };
enum class GeneratorVariant { U, V1, V2 };

/// Identifier of an instance generator, e.g. "MM-D-U" or "RR-CB-2".
struct GeneratorId {
    GeneratorFamily family = GeneratorFamily::MM_D;
    GeneratorVariant variant = GeneratorVariant::U;

    std::string str() const;
    static std::optional<GeneratorId> parse(const std::string& text);

    Criterion criterion() const;
    bool uses_discrete_set() const;
    bool uses_interval_set() const;
    bool uses_budgeted_set() const;
    bool needs_first_stage() const;
    bool needs_delta() const;
    /// Budget mode implied by the family (overridable for MM-B only).
    BudgetMode default_budget_mode() const;
    DeltaSemantics default_delta_semantics() const;
};

/// All thirty generators in catalog order.
const std::vector<GeneratorId>& generator_catalog();

/// One catalog row for the CLI listing.
struct GeneratorInfo {
    GeneratorId id;
    std::string required_params;
    std::string invariants;
};
std::vector<GeneratorInfo> generator_info();

struct ShapeParams {
    int n = 0;
    int p = 0;
    int N = 0;                                  // discrete families
    Rational gamma;                             // budgeted families
    std::optional<std::int64_t> delta;          // recoverable families
    std::optional<DeltaSemantics> delta_semantics; // default: family convention
    std::optional<BudgetMode> budget_mode;      // MM-B only; others are fixed
    std::uint64_t seed = 0;
};

/// Draws an instance. Deterministic: the same (generator, shape) always
/// produces the same instance. Vector rows draw from per-row substreams
/// (first-stage costs stream 0, scenario j stream j, interval/budgeted
/// lower stream 1 and deviations stream 2), so extending N leaves earlier
/// scenarios untouched.
ProblemInstance sample_instance(const GeneratorId& g, const ShapeParams& sp);

/// Checks the generator-specific range/symmetry/complement identities of an
/// instance against the recipe named in its provenance.
std::vector<std::string> check_sampler_invariants(const ProblemInstance& inst);

} // namespace robsel

#endif
