#include "robsel/milp/model.hpp"

#include <sstream>
#include <stdexcept>

namespace robsel::milp {

int MilpModel::add_variable(Variable v) {
    if (name_index_.count(v.name)) throw std::invalid_argument("duplicate variable name: " + v.name);
    int idx = static_cast<int>(variables_.size());
    name_index_.emplace(v.name, idx);
    variables_.push_back(std::move(v));
    return idx;
}

int MilpModel::add_continuous(const std::string& name, std::optional<Rational> lower,
                              std::optional<Rational> upper) {
    return add_variable(Variable{name, VarKind::Continuous, std::move(lower), std::move(upper)});
}

int MilpModel::add_binary(const std::string& name) {
    return add_variable(Variable{name, VarKind::Binary, Rational(0), Rational(1)});
}

void MilpModel::add_constraint(std::vector<Term> terms, Relation rel, Rational rhs) {
    constraints_.push_back(Constraint{std::move(terms), rel, std::move(rhs)});
}

void MilpModel::set_objective(std::vector<Term> terms, Sense sense, Rational constant) {
    objective_ = Objective{std::move(terms), std::move(constant), sense};
}

std::size_t MilpModel::nonzero_count() const {
    std::size_t nnz = 0;
    for (const auto& c : constraints_) nnz += c.terms.size();
    return nnz;
}

bool MilpModel::has_binaries() const {
    for (const auto& v : variables_) {
        if (v.kind == VarKind::Binary) return true;
    }
    return false;
}

int MilpModel::index_of(const std::string& name) const {
    auto it = name_index_.find(name);
    return it == name_index_.end() ? -1 : it->second;
}

std::string MilpModel::dump_lp() const {
    std::ostringstream os;
    os << (objective_.sense == Sense::Minimize ? "minimize" : "maximize") << "\n  obj:";
    for (const auto& t : objective_.terms) {
        os << " " << (t.coef.is_negative() ? "- " : "+ ") << abs(t.coef).str() << " "
           << variables_[t.var].name;
    }
    if (!objective_.constant.is_zero()) os << " + " << objective_.constant.str();
    os << "\nsubject to\n";
    for (std::size_t r = 0; r < constraints_.size(); ++r) {
        const auto& c = constraints_[r];
        os << "  r" << r << ":";
        for (const auto& t : c.terms) {
            os << " " << (t.coef.is_negative() ? "- " : "+ ") << abs(t.coef).str() << " "
               << variables_[t.var].name;
        }
        switch (c.rel) {
            case Relation::LessEqual: os << " <= "; break;
            case Relation::GreaterEqual: os << " >= "; break;
            case Relation::Equal: os << " = "; break;
        }
        os << c.rhs.str() << "\n";
    }
    os << "bounds\n";
    for (const auto& v : variables_) {
        os << "  " << (v.lower ? v.lower->str() : "-inf") << " <= " << v.name << " <= "
           << (v.upper ? v.upper->str() : "+inf") << "\n";
    }
    os << "binaries\n ";
    for (const auto& v : variables_) {
        if (v.kind == VarKind::Binary) os << " " << v.name;
    }
    os << "\nend\n";
    return os.str();
}

std::vector<std::string> validate_model(const MilpModel& m) {
    std::vector<std::string> defects;
    const int n = m.var_count();
    for (const auto& v : m.variables()) {
        if (v.kind == VarKind::Binary) {
            if (!v.lower || !v.upper || *v.lower != Rational(0) || *v.upper != Rational(1)) {
                defects.push_back("binary variable " + v.name + " without [0,1] bounds");
            }
        }
        if (v.lower && v.upper && *v.lower > *v.upper) {
            defects.push_back("inverted bounds on " + v.name);
        }
    }
    auto check_terms = [&](const std::vector<Term>& terms, const std::string& where) {
        for (const auto& t : terms) {
            if (t.var < 0 || t.var >= n) {
                defects.push_back("unknown variable index in " + where);
            }
        }
    };
    for (std::size_t r = 0; r < m.constraints().size(); ++r) {
        const auto& c = m.constraints()[r];
        if (c.terms.empty()) defects.push_back("empty constraint r" + std::to_string(r));
        check_terms(c.terms, "constraint r" + std::to_string(r));
    }
    check_terms(m.objective().terms, "objective");
    return defects;
}

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::FeasibleTimeLimit: return "feasible_time_limit";
        case SolveStatus::FeasibleNodeLimit: return "feasible_node_limit";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::Unbounded: return "unbounded";
        case SolveStatus::NumericalError: return "numerical_error";
    }
    return "?";
}

double SolveResult::value_of(const MilpModel& m, const std::string& name) const {
    int idx = m.index_of(name);
    if (idx < 0 || idx >= static_cast<int>(values.size())) {
        throw std::invalid_argument("unknown variable: " + name);
    }
    return values[static_cast<std::size_t>(idx)];
}

} // namespace robsel::milp
