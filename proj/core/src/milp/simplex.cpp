#include "simplex.hpp"

#include <algorithm>
#include <limits>

namespace robsel::milp::detail {

std::optional<Rational> narrow_to_rational(const BigRational& v) {
    const auto num = boost::multiprecision::numerator(v);
    const auto den = boost::multiprecision::denominator(v);
    const boost::multiprecision::cpp_int lo = std::numeric_limits<std::int64_t>::min();
    const boost::multiprecision::cpp_int hi = std::numeric_limits<std::int64_t>::max();
    if (num < lo || num > hi || den > hi) return std::nullopt;
    return Rational(num.convert_to<std::int64_t>(), den.convert_to<std::int64_t>());
}

template <typename S>
std::vector<S> SimplexCore<S>::ftran(const std::vector<std::pair<int, S>>& col) const {
    std::vector<S> out(static_cast<std::size_t>(m_), S{});
    for (const auto& [row, coef] : col) {
        if (coef == S{}) continue;
        const S* brow_base = binv_.data();
        for (int i = 0; i < m_; ++i) {
            out[static_cast<std::size_t>(i)] += brow_base[static_cast<std::size_t>(i) * m_ + row] * coef;
        }
    }
    return out;
}

template <typename S>
void SimplexCore<S>::compute_basic_values() {
    std::vector<S> residual = rhs_;
    for (std::size_t j = 0; j < cols_.size(); ++j) {
        if (state_[j] == VarState::Basic) continue;
        if (x_[j] == S{}) continue;
        for (const auto& [row, coef] : cols_[j].entries) {
            residual[static_cast<std::size_t>(row)] -= coef * x_[j];
        }
    }
    for (int i = 0; i < m_; ++i) {
        S v{};
        const S* brow = binv_.data() + static_cast<std::size_t>(i) * m_;
        for (int r = 0; r < m_; ++r) v += brow[r] * residual[static_cast<std::size_t>(r)];
        x_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])] = v;
    }
}

template <typename S>
std::vector<S> SimplexCore<S>::compute_duals(const std::vector<S>& costs) const {
    std::vector<S> y(static_cast<std::size_t>(m_), S{});
    for (int i = 0; i < m_; ++i) {
        const S& cb = costs[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])];
        if (cb == S{}) continue;
        const S* brow = binv_.data() + static_cast<std::size_t>(i) * m_;
        for (int r = 0; r < m_; ++r) y[static_cast<std::size_t>(r)] += cb * brow[r];
    }
    return y;
}

template <typename S>
bool SimplexCore<S>::refactorize() {
    // Gauss-Jordan inversion of the basis matrix with partial pivoting.
    std::vector<S> mat(static_cast<std::size_t>(m_) * m_, S{});
    for (int i = 0; i < m_; ++i) {
        for (const auto& [row, coef] : cols_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])].entries) {
            mat[static_cast<std::size_t>(row) * m_ + i] = coef;
        }
    }
    std::vector<S> inv(static_cast<std::size_t>(m_) * m_, S{});
    for (int i = 0; i < m_; ++i) inv[static_cast<std::size_t>(i) * m_ + i] = S(1);

    for (int c = 0; c < m_; ++c) {
        int pivot_row = -1;
        if constexpr (kExact) {
            for (int r = c; r < m_; ++r) {
                if (mat[static_cast<std::size_t>(r) * m_ + c] != S{}) {
                    pivot_row = r;
                    break;
                }
            }
        } else {
            S best{};
            for (int r = c; r < m_; ++r) {
                S mag = sabs(mat[static_cast<std::size_t>(r) * m_ + c]);
                if (mag > best) {
                    best = mag;
                    pivot_row = r;
                }
            }
            if (pivot_row >= 0 && best <= static_cast<S>(pivot_tol_double_)) pivot_row = -1;
        }
        if (pivot_row < 0) return false;
        if (pivot_row != c) {
            // row swaps are part of the accumulated row operations; the
            // row -> basic-variable map is untouched by them
            for (int k = 0; k < m_; ++k) {
                std::swap(mat[static_cast<std::size_t>(pivot_row) * m_ + k], mat[static_cast<std::size_t>(c) * m_ + k]);
                std::swap(inv[static_cast<std::size_t>(pivot_row) * m_ + k], inv[static_cast<std::size_t>(c) * m_ + k]);
            }
        }
        S diag = mat[static_cast<std::size_t>(c) * m_ + c];
        for (int k = 0; k < m_; ++k) {
            mat[static_cast<std::size_t>(c) * m_ + k] /= diag;
            inv[static_cast<std::size_t>(c) * m_ + k] /= diag;
        }
        for (int r = 0; r < m_; ++r) {
            if (r == c) continue;
            S factor = mat[static_cast<std::size_t>(r) * m_ + c];
            if (factor == S{}) continue;
            for (int k = 0; k < m_; ++k) {
                mat[static_cast<std::size_t>(r) * m_ + k] -= factor * mat[static_cast<std::size_t>(c) * m_ + k];
                inv[static_cast<std::size_t>(r) * m_ + k] -= factor * inv[static_cast<std::size_t>(c) * m_ + k];
            }
        }
    }
    binv_ = std::move(inv);
    pivots_since_refactor_ = 0;
    return true;
}

template <typename S>
void SimplexCore<S>::pivot_update(int leave_row, const std::vector<S>& d) {
    const S pivot = d[static_cast<std::size_t>(leave_row)];
    S* lrow = binv_.data() + static_cast<std::size_t>(leave_row) * m_;
    for (int k = 0; k < m_; ++k) lrow[k] /= pivot;
    for (int i = 0; i < m_; ++i) {
        if (i == leave_row) continue;
        const S& factor = d[static_cast<std::size_t>(i)];
        if (factor == S{}) continue;
        S* row = binv_.data() + static_cast<std::size_t>(i) * m_;
        for (int k = 0; k < m_; ++k) row[k] -= factor * lrow[k];
    }
    ++pivots_since_refactor_;
}

template <typename S>
LpOutcome SimplexCore<S>::run_phase(const std::vector<S>& costs) {
    const int ncols = static_cast<int>(cols_.size());
    const std::int64_t iter_cap = 2000 + 400LL * (m_ + ncols);
    std::int64_t phase_iters = 0;

    while (true) {
        if (++phase_iters > iter_cap) return LpOutcome::Numerical;
        if (deadline_ && (phase_iters % 32 == 0) && Clock::now() > *deadline_) {
            return LpOutcome::Interrupted;
        }

        std::vector<S> y = compute_duals(costs);

        // pricing
        int enter = -1;
        int direction = 0; // +1 increase, -1 decrease
        S best_score{};
        for (int j = 0; j < ncols; ++j) {
            const VarState st = state_[static_cast<std::size_t>(j)];
            if (st == VarState::Basic) continue;
            const auto& col = cols_[static_cast<std::size_t>(j)];
            if (col.lower && col.upper && *col.lower == *col.upper) continue; // fixed
            S red = costs[static_cast<std::size_t>(j)];
            for (const auto& [row, coef] : col.entries) red -= y[static_cast<std::size_t>(row)] * coef;

            int dir = 0;
            if (st == VarState::AtLower) {
                if (!is_zero(red) && red < S{}) dir = +1;
            } else if (st == VarState::AtUpper) {
                if (!is_zero(red) && red > S{}) dir = -1;
            } else { // free at zero
                if (!is_zero(red)) dir = red < S{} ? +1 : -1;
            }
            if (dir == 0) continue;
            if (bland_) {
                enter = j;
                direction = dir;
                break;
            }
            S score = sabs(red);
            if (enter < 0 || score > best_score) {
                enter = j;
                direction = dir;
                best_score = score;
            }
        }
        if (enter < 0) return LpOutcome::Optimal;

        // ratio test: largest step the entering variable can move
        std::vector<S> d = ftran(cols_[static_cast<std::size_t>(enter)].entries);
        const auto& ecol = cols_[static_cast<std::size_t>(enter)];

        bool unlimited = true;
        S best_step{};
        int leave_row = -1; // -1 with a limit means the entering bound blocks first
        int leave_to_upper = 0;
        if (ecol.lower.has_value() && ecol.upper.has_value()) {
            unlimited = false;
            best_step = *ecol.upper - *ecol.lower;
        }

        for (int i = 0; i < m_; ++i) {
            S delta = d[static_cast<std::size_t>(i)];
            if (direction < 0) delta = -delta;
            if (is_zero(delta)) continue;
            const int bvar = basis_[static_cast<std::size_t>(i)];
            const auto& bcol = cols_[static_cast<std::size_t>(bvar)];
            const S& bval = x_[static_cast<std::size_t>(bvar)];
            S step{};
            int to_upper;
            if (delta > S{}) {
                if (!bcol.lower) continue;
                step = (bval - *bcol.lower) / delta;
                to_upper = 0;
            } else {
                if (!bcol.upper) continue;
                step = (bval - *bcol.upper) / delta;
                to_upper = 1;
            }
            if (step < S{}) step = S{}; // tolerate tiny infeasibility

            bool better = false;
            if (unlimited || step < best_step) {
                better = true;
            } else if (!(best_step < step) && leave_row >= 0 &&
                       bvar < basis_[static_cast<std::size_t>(leave_row)]) {
                better = true; // deterministic tie: smallest basic variable index
            }
            if (better) {
                unlimited = false;
                best_step = step;
                leave_row = i;
                leave_to_upper = to_upper;
            }
        }

        if (unlimited) return LpOutcome::Unbounded;

        const bool degenerate = is_zero(best_step);
        if (degenerate) {
            if (++degenerate_streak_ > 1000) bland_ = true;
        } else {
            degenerate_streak_ = 0;
            bland_ = false;
        }
        ++iterations_;

        // apply the move to all basic values
        if (!is_zero(best_step)) {
            for (int i = 0; i < m_; ++i) {
                const S& delta = d[static_cast<std::size_t>(i)];
                if (delta == S{}) continue;
                S change = delta * best_step;
                if (direction < 0) {
                    x_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])] += change;
                } else {
                    x_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])] -= change;
                }
            }
        }

        if (leave_row < 0) {
            // entering variable runs to its opposite bound; no basis change
            if (direction > 0) {
                x_[static_cast<std::size_t>(enter)] = *ecol.upper;
                state_[static_cast<std::size_t>(enter)] = VarState::AtUpper;
            } else {
                x_[static_cast<std::size_t>(enter)] = *ecol.lower;
                state_[static_cast<std::size_t>(enter)] = VarState::AtLower;
            }
            continue;
        }

        // basis change
        const int leaving = basis_[static_cast<std::size_t>(leave_row)];
        S enter_val = x_[static_cast<std::size_t>(enter)];
        if (direction > 0) {
            enter_val += best_step;
        } else {
            enter_val -= best_step;
        }
        x_[static_cast<std::size_t>(enter)] = enter_val;
        if (leave_to_upper) {
            x_[static_cast<std::size_t>(leaving)] = *cols_[static_cast<std::size_t>(leaving)].upper;
            state_[static_cast<std::size_t>(leaving)] = VarState::AtUpper;
        } else {
            x_[static_cast<std::size_t>(leaving)] = *cols_[static_cast<std::size_t>(leaving)].lower;
            state_[static_cast<std::size_t>(leaving)] = VarState::AtLower;
        }
        basis_[static_cast<std::size_t>(leave_row)] = enter;
        state_[static_cast<std::size_t>(enter)] = VarState::Basic;
        pivot_update(leave_row, d);

        if (pivots_since_refactor_ >= 120) {
            if (!refactorize()) return LpOutcome::Numerical;
            compute_basic_values();
        }
    }
}

template <typename S>
LpOutcome SimplexCore<S>::phase_one() {
    const int ncols_orig = static_cast<int>(cols_.size());
    state_.assign(cols_.size(), VarState::AtLower);
    x_.assign(cols_.size(), S{});
    for (int j = 0; j < ncols_orig; ++j) {
        auto& col = cols_[static_cast<std::size_t>(j)];
        if (col.lower) {
            state_[static_cast<std::size_t>(j)] = VarState::AtLower;
            x_[static_cast<std::size_t>(j)] = *col.lower;
        } else if (col.upper) {
            state_[static_cast<std::size_t>(j)] = VarState::AtUpper;
            x_[static_cast<std::size_t>(j)] = *col.upper;
        } else {
            state_[static_cast<std::size_t>(j)] = VarState::FreeAtZero;
            x_[static_cast<std::size_t>(j)] = S{};
        }
    }

    // residuals decide the artificial column signs
    std::vector<S> residual = rhs_;
    for (int j = 0; j < ncols_orig; ++j) {
        if (x_[static_cast<std::size_t>(j)] == S{}) continue;
        for (const auto& [row, coef] : cols_[static_cast<std::size_t>(j)].entries) {
            residual[static_cast<std::size_t>(row)] -= coef * x_[static_cast<std::size_t>(j)];
        }
    }

    basis_.resize(static_cast<std::size_t>(m_));
    binv_.assign(static_cast<std::size_t>(m_) * m_, S{});
    for (int r = 0; r < m_; ++r) {
        Column<S> art;
        art.artificial = true;
        const bool nonneg = !(residual[static_cast<std::size_t>(r)] < S{});
        art.entries.emplace_back(r, nonneg ? S(1) : S(-1));
        art.lower = S(0);
        art.upper = std::nullopt;
        cols_.push_back(std::move(art));
        int idx = static_cast<int>(cols_.size()) - 1;
        basis_[static_cast<std::size_t>(r)] = idx;
        state_.push_back(VarState::Basic);
        x_.push_back(nonneg ? residual[static_cast<std::size_t>(r)] : -residual[static_cast<std::size_t>(r)]);
        binv_[static_cast<std::size_t>(r) * m_ + r] = nonneg ? S(1) : S(-1);
    }

    std::vector<S> costs(cols_.size(), S{});
    for (std::size_t j = 0; j < cols_.size(); ++j) {
        if (cols_[j].artificial) costs[j] = S(1);
    }
    LpOutcome out = run_phase(costs);
    if (out != LpOutcome::Optimal) {
        return out == LpOutcome::Unbounded ? LpOutcome::Numerical : out;
    }

    S infeasibility{};
    for (std::size_t j = 0; j < cols_.size(); ++j) {
        if (cols_[j].artificial) infeasibility += x_[j];
    }
    if constexpr (kExact) {
        if (infeasibility != S{}) return LpOutcome::Infeasible;
    } else {
        if (scalar_to_double(infeasibility) > 1e-7) return LpOutcome::Infeasible;
    }

    drive_out_artificials();
    return LpOutcome::Optimal;
}

template <typename S>
void SimplexCore<S>::drive_out_artificials() {
    // pin artificials to zero
    for (std::size_t j = 0; j < cols_.size(); ++j) {
        if (!cols_[j].artificial) continue;
        cols_[j].lower = S(0);
        cols_[j].upper = S(0);
        if (state_[j] != VarState::Basic) {
            state_[j] = VarState::AtLower;
            x_[j] = S{};
        }
    }
    // swap basic artificials for structural columns where possible
    for (int r = 0; r < m_; ++r) {
        const int bvar = basis_[static_cast<std::size_t>(r)];
        if (!cols_[static_cast<std::size_t>(bvar)].artificial) continue;
        const S* brow = binv_.data() + static_cast<std::size_t>(r) * m_;
        int enter = -1;
        for (std::size_t j = 0; j < cols_.size(); ++j) {
            if (cols_[j].artificial || state_[j] == VarState::Basic) continue;
            S alpha{};
            for (const auto& [row, coef] : cols_[j].entries) alpha += brow[row] * coef;
            if (!is_zero(alpha)) {
                enter = static_cast<int>(j);
                break;
            }
        }
        if (enter < 0) continue; // redundant row; artificial stays basic at zero
        std::vector<S> d = ftran(cols_[static_cast<std::size_t>(enter)].entries);
        // degenerate swap: values do not move (artificial is at zero)
        state_[static_cast<std::size_t>(enter)] = VarState::Basic;
        state_[static_cast<std::size_t>(bvar)] = VarState::AtLower;
        x_[static_cast<std::size_t>(bvar)] = S{};
        basis_[static_cast<std::size_t>(r)] = enter;
        pivot_update(r, d);
        compute_basic_values();
    }
}

template <typename S>
LpOutcome SimplexCore<S>::solve() {
    if (m_ == 0) {
        // no constraints: each variable sits at its best bound
        state_.assign(cols_.size(), VarState::AtLower);
        x_.assign(cols_.size(), S{});
        for (std::size_t j = 0; j < cols_.size(); ++j) {
            const auto& col = cols_[j];
            bool want_low = !(col.cost < S{});
            if (want_low) {
                if (col.lower) {
                    x_[j] = *col.lower;
                    state_[j] = VarState::AtLower;
                } else if (col.cost == S{}) {
                    x_[j] = S{};
                    state_[j] = VarState::FreeAtZero;
                } else {
                    return LpOutcome::Unbounded;
                }
            } else {
                if (col.upper) {
                    x_[j] = *col.upper;
                    state_[j] = VarState::AtUpper;
                } else {
                    return LpOutcome::Unbounded;
                }
            }
        }
        return LpOutcome::Optimal;
    }

    LpOutcome out = phase_one();
    if (out != LpOutcome::Optimal) return out;

    std::vector<S> costs(cols_.size(), S{});
    for (std::size_t j = 0; j < cols_.size(); ++j) costs[j] = cols_[j].cost;
    bland_ = false;
    degenerate_streak_ = 0;
    return run_phase(costs);
}

template <typename S>
S SimplexCore<S>::objective() const {
    S total{};
    for (std::size_t j = 0; j < cols_.size(); ++j) {
        if (cols_[j].cost == S{}) continue;
        total += cols_[j].cost * x_[j];
    }
    return total;
}

template <typename S>
std::vector<S> SimplexCore<S>::row_duals() const {
    std::vector<S> costs(cols_.size(), S{});
    for (std::size_t j = 0; j < cols_.size(); ++j) costs[j] = cols_[j].cost;
    return compute_duals(costs);
}

template class SimplexCore<double>;
template class SimplexCore<BigRational>;

} // namespace robsel::milp::detail
