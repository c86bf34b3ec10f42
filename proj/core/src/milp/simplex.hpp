#ifndef ROBSEL_MILP_SIMPLEX_HPP
#define ROBSEL_MILP_SIMPLEX_HPP

// Bounded-variable primal simplex, templated on the scalar type so the same
// pivoting code runs in floating point (fast path) and in exact rational
// arithmetic (certification path). Internal to the solver.

#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "robsel/rational.hpp"

namespace robsel::milp::detail {

using BigRational = boost::multiprecision::cpp_rational;

inline double sabs(double v) { return std::abs(v); }
inline BigRational sabs(const BigRational& v) { return v < 0 ? BigRational(-v) : v; }

inline double to_scalar(const Rational& r, double) { return r.to_double(); }
inline BigRational to_scalar(const Rational& r, const BigRational&) {
    return BigRational(boost::multiprecision::cpp_int(r.num()), boost::multiprecision::cpp_int(r.den()));
}

inline double scalar_to_double(double v) { return v; }
inline double scalar_to_double(const BigRational& v) { return v.convert_to<double>(); }

std::optional<Rational> narrow_to_rational(const BigRational& v);

enum class LpOutcome { Optimal, Infeasible, Unbounded, Interrupted, Numerical };

/// One bounded column of the standard-form problem A x = b.
template <typename S>
struct Column {
    std::vector<std::pair<int, S>> entries; // (row, coefficient)
    std::optional<S> lower;
    std::optional<S> upper;
    S cost{};
    bool artificial = false;
};

enum class VarState : std::uint8_t { Basic, AtLower, AtUpper, FreeAtZero };

template <typename S>
class SimplexCore {
public:
    static constexpr bool kExact = !std::is_same_v<S, double>;

    using Clock = std::chrono::steady_clock;

    SimplexCore(int rows, std::vector<Column<S>> cols, std::vector<S> rhs)
        : m_(rows), cols_(std::move(cols)), rhs_(std::move(rhs)) {}

    void set_deadline(std::optional<Clock::time_point> d) { deadline_ = d; }
    void set_pivot_tol(double t) { pivot_tol_double_ = t; }

    LpOutcome solve();

    const std::vector<S>& values() const { return x_; }
    S objective() const;
    /// Simplex multipliers c_B B^-1 at termination (one per row).
    std::vector<S> row_duals() const;
    std::int64_t iterations() const { return iterations_; }

private:
    bool is_zero(const S& v) const {
        if constexpr (kExact) {
            return v == 0;
        } else {
            return sabs(v) <= static_cast<S>(pivot_tol_double_);
        }
    }

    std::vector<S> ftran(const std::vector<std::pair<int, S>>& col) const;
    void compute_basic_values();
    std::vector<S> compute_duals(const std::vector<S>& costs) const;
    bool refactorize();
    void pivot_update(int leave_row, const std::vector<S>& direction);

    // One simplex phase minimizing `costs`; returns outcome.
    LpOutcome run_phase(const std::vector<S>& costs);

    LpOutcome phase_one();
    void drive_out_artificials();

    int m_;
    std::vector<Column<S>> cols_;
    std::vector<S> rhs_;

    std::vector<int> basis_;           // row -> column
    std::vector<VarState> state_;      // column -> state
    std::vector<S> x_;                 // column -> value
    std::vector<S> binv_;              // dense m x m, row-major
    std::int64_t iterations_ = 0;
    std::int64_t degenerate_streak_ = 0;
    bool bland_ = false;
    int pivots_since_refactor_ = 0;
    double pivot_tol_double_ = 1e-9;
    std::optional<Clock::time_point> deadline_;
};

extern template class SimplexCore<double>;
extern template class SimplexCore<BigRational>;

} // namespace robsel::milp::detail

#endif
