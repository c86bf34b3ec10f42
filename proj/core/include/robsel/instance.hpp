#ifndef ROBSEL_INSTANCE_HPP
#define ROBSEL_INSTANCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "robsel/rational.hpp"

namespace robsel {

using CostVector = std::vector<Rational>;

Rational sum(const CostVector& v);
Rational dot(const CostVector& costs, const std::vector<int>& chosen01);

enum class Criterion { MinMax, MinMaxRegret, TwoStage, Recoverable };

enum class BudgetMode {
    ContinuousItems, // up to gamma items deviate, fractionally
    DiscreteItems,   // up to gamma items deviate, all-or-nothing
    VariableBudget,  // total deviation mass bounded by gamma
};

enum class DeltaSemantics {
    KeptAtLeast,   // at least delta first-stage items stay chosen
    ChangedAtMost, // at most delta items are exchanged (p - delta stay)
};

const char* to_string(Criterion c);
const char* to_string(BudgetMode m);
const char* to_string(DeltaSemantics s);

struct DiscreteSet {
    std::vector<CostVector> scenarios;
};

struct IntervalSet {
    CostVector lower;
    CostVector deviation;
};

struct BudgetedSet {
    CostVector lower;
    CostVector deviation;
    Rational gamma;
    BudgetMode mode = BudgetMode::ContinuousItems;
};

/// Tagged union of the three uncertainty set shapes.
struct UncertaintySet {
    enum class Kind { Discrete, Interval, Budgeted } kind = Kind::Discrete;
    DiscreteSet discrete;
    IntervalSet interval;
    BudgetedSet budgeted;

    static UncertaintySet make_discrete(std::vector<CostVector> scenarios);
    static UncertaintySet make_interval(CostVector lower, CostVector deviation);
    static UncertaintySet make_budgeted(CostVector lower, CostVector deviation, Rational gamma,
                                        BudgetMode mode);

    int dimension() const;
    int scenario_count() const { return static_cast<int>(discrete.scenarios.size()); }
};

/// Lineage of an instance produced by a hardening run.
struct HiroLineage {
    std::string parent_hash;
    Rational b;
    std::string mode;
    int iterations = 0;
    std::vector<int> permutation; // item reordering applied before hardening, if any
    std::string note;             // model adjustments applied during hardening
};

struct Provenance {
    std::string generator = "manual";
    std::uint64_t seed = 0;
    std::optional<HiroLineage> hiro;
};

/// A robust selection instance: criterion, uncertainty set and the selection
/// parameters. `first_stage_costs` is required exactly for the two-stage and
/// recoverable criteria; `delta` only for recoverable ones.
struct ProblemInstance {
    int n = 0;
    int p = 0;
    Criterion criterion = Criterion::MinMax;
    UncertaintySet uncertainty;
    std::optional<CostVector> first_stage_costs;
    std::optional<std::int64_t> delta;
    DeltaSemantics delta_semantics = DeltaSemantics::KeptAtLeast;
    Provenance provenance;

    /// Minimum number of first-stage items that must stay in a recovery
    /// solution, folding the two delta readings into one number.
    std::int64_t kept_min() const;

    bool is_two_stage_like() const {
        return criterion == Criterion::TwoStage || criterion == Criterion::Recoverable;
    }
};

/// Validates structural invariants (lengths, ranges, criterion/uncertainty
/// pairing). Returns a list of human-readable defects; empty means valid.
std::vector<std::string> validate_instance(const ProblemInstance& inst);

/// Throwing wrapper around validate_instance.
void require_valid(const ProblemInstance& inst);

/// True when the (criterion, uncertainty, mode) combination has a solver
/// formulation. MinMax x Interval is accepted but nominal-equivalent.
bool pairing_supported(const ProblemInstance& inst);

enum class SolutionRole {
    Full,              // exactly p items
    PartialFirstStage, // at most p items
};

struct SelectionSolution {
    std::vector<int> chosen; // 0/1 indicators, length n
    SolutionRole role = SolutionRole::Full;

    int count() const;
    std::vector<int> support() const;

    static SelectionSolution from_support(int n, const std::vector<int>& items,
                                          SolutionRole role = SolutionRole::Full);
};

bool operator==(const SelectionSolution& a, const SelectionSolution& b);

/// Lexicographic preference used for all tie-breaking between solutions:
/// the solution whose chosen-index list is lexicographically smaller wins.
bool lex_before(const std::vector<int>& chosen_a, const std::vector<int>& chosen_b);

} // namespace robsel

#endif
