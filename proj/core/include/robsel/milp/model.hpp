#ifndef ROBSEL_MILP_MODEL_HPP
#define ROBSEL_MILP_MODEL_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "robsel/rational.hpp"

namespace robsel::milp {

enum class VarKind { Continuous, Binary };
enum class Relation { LessEqual, GreaterEqual, Equal };
enum class Sense { Minimize, Maximize };

struct Variable {
    std::string name;
    VarKind kind = VarKind::Continuous;
    std::optional<Rational> lower; // nullopt = -infinity
    std::optional<Rational> upper; // nullopt = +infinity
};

struct Term {
    int var = -1;
    Rational coef;
};

struct Constraint {
    std::vector<Term> terms;
    Relation rel = Relation::LessEqual;
    Rational rhs;
};

struct Objective {
    std::vector<Term> terms;
    Rational constant;
    Sense sense = Sense::Minimize;
};

/// A 0-1 mixed linear program. Variables are continuous or binary; binaries
/// always have bounds [0, 1]. Names are unique and index the solution map.
class MilpModel {
public:
    int add_continuous(const std::string& name, std::optional<Rational> lower,
                       std::optional<Rational> upper);
    int add_binary(const std::string& name);

    void add_constraint(std::vector<Term> terms, Relation rel, Rational rhs);
    void set_objective(std::vector<Term> terms, Sense sense, Rational constant = Rational(0));

    int var_count() const { return static_cast<int>(variables_.size()); }
    int constraint_count() const { return static_cast<int>(constraints_.size()); }
    std::size_t nonzero_count() const;
    bool has_binaries() const;

    const std::vector<Variable>& variables() const { return variables_; }
    const std::vector<Constraint>& constraints() const { return constraints_; }
    const Objective& objective() const { return objective_; }

    int index_of(const std::string& name) const; // -1 when unknown

    /// Plain-text dump in an LP-style grammar, for debugging only.
    std::string dump_lp() const;

private:
    int add_variable(Variable v);

    std::vector<Variable> variables_;
    std::vector<Constraint> constraints_;
    Objective objective_;
    std::unordered_map<std::string, int> name_index_;
};

/// Reports structural defects: duplicate or unknown variables, empty
/// constraints, inverted bounds. Empty result means well-formed.
std::vector<std::string> validate_model(const MilpModel& m);

enum class SolveStatus {
    Optimal,
    FeasibleTimeLimit,
    FeasibleNodeLimit,
    Infeasible,
    Unbounded,
    NumericalError,
};

const char* to_string(SolveStatus s);

enum class BranchRule { MostFractional, FirstFractional };

struct SolverConfig {
    double feasibility_tol = 1e-7;
    double integrality_tol = 1e-6;
    double time_limit_seconds = 1e18;
    std::int64_t node_limit = 1'000'000'000;
    BranchRule branching = BranchRule::MostFractional;
    /// Exact rational re-solve of the final optimum is attempted when the
    /// model is small enough; see solver notes.
    bool certify_exact = true;
};

struct SolveResult {
    SolveStatus status = SolveStatus::NumericalError;
    double objective = 0.0;                    // includes the objective constant
    std::vector<double> values;                // by variable index
    std::optional<Rational> objective_exact;   // set when certification succeeded
    std::optional<std::vector<Rational>> values_exact;
    double best_bound = 0.0;
    std::int64_t node_count = 0;
    std::int64_t lp_iterations = 0;
    double wall_time_seconds = 0.0;

    bool has_solution() const {
        return status == SolveStatus::Optimal || status == SolveStatus::FeasibleTimeLimit ||
               status == SolveStatus::FeasibleNodeLimit;
    }
    double value_of(const MilpModel& m, const std::string& name) const;
};

} // namespace robsel::milp

#endif
