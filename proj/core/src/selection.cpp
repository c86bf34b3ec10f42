#include "robsel/selection.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace robsel {

namespace {

// Indices sorted by (cost, index); the stable tie rule used everywhere.
std::vector<int> by_cost(const CostVector& costs, const std::vector<int>& pool) {
    std::vector<int> order = pool;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (costs[a] != costs[b]) return costs[a] < costs[b];
        return a < b;
    });
    return order;
}

} // namespace

std::pair<SelectionSolution, Rational> solve_nominal_selection(const CostVector& costs, int p) {
    const int n = static_cast<int>(costs.size());
    if (p < 1 || p > n) throw std::invalid_argument("p out of range [1, n]");
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    auto order = by_cost(costs, pool);
    std::vector<int> chosen(order.begin(), order.begin() + p);
    SelectionSolution sol = SelectionSolution::from_support(n, chosen);
    Rational value;
    for (int i : chosen) value += costs[i];
    return {sol, value};
}

CostVector worst_case_regret_scenario(const SelectionSolution& x, const CostVector& lower,
                                      const CostVector& deviation) {
    if (lower.size() != deviation.size() || lower.size() != x.chosen.size()) {
        throw std::invalid_argument("length mismatch");
    }
    CostVector c = lower;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (x.chosen[i]) c[i] += deviation[i];
    }
    return c;
}

std::pair<SelectionSolution, Rational> second_stage_completion(const SelectionSolution& x,
                                                               const CostVector& costs, int p) {
    const int n = static_cast<int>(costs.size());
    const int have = x.count();
    if (have > p) throw std::invalid_argument("first-stage solution larger than p");
    std::vector<int> outside;
    for (int i = 0; i < n; ++i) {
        if (!x.chosen[i]) outside.push_back(i);
    }
    const int need = p - have;
    if (need > static_cast<int>(outside.size())) throw std::invalid_argument("not enough items to complete");
    auto order = by_cost(costs, outside);
    std::vector<int> picked(order.begin(), order.begin() + need);
    SelectionSolution y = SelectionSolution::from_support(n, picked);
    Rational value;
    for (int i : picked) value += costs[i];
    return {y, value};
}

std::pair<SelectionSolution, Rational> recovery_best_response(const SelectionSolution& x,
                                                              const CostVector& costs, int p,
                                                              std::int64_t kept_min) {
    const int n = static_cast<int>(costs.size());
    if (kept_min < 0) kept_min = 0;
    if (kept_min > p) throw std::invalid_argument("kept_min exceeds p");
    std::vector<int> inside, outside;
    for (int i = 0; i < n; ++i) {
        (x.chosen[i] ? inside : outside).push_back(i);
    }
    auto inside_order = by_cost(costs, inside);
    auto outside_order = by_cost(costs, outside);

    // prefix sums of the sorted pools
    std::vector<Rational> in_prefix(inside_order.size() + 1), out_prefix(outside_order.size() + 1);
    for (std::size_t i = 0; i < inside_order.size(); ++i)
        in_prefix[i + 1] = in_prefix[i] + costs[inside_order[i]];
    for (std::size_t i = 0; i < outside_order.size(); ++i)
        out_prefix[i + 1] = out_prefix[i] + costs[outside_order[i]];

    bool found = false;
    Rational best_value;
    int best_k = -1;
    for (std::int64_t k = kept_min; k <= p; ++k) {
        if (k > static_cast<std::int64_t>(inside_order.size())) break;
        std::int64_t from_outside = p - k;
        if (from_outside > static_cast<std::int64_t>(outside_order.size())) continue;
        Rational value = in_prefix[static_cast<std::size_t>(k)] +
                         out_prefix[static_cast<std::size_t>(from_outside)];
        if (!found || value < best_value) {
            found = true;
            best_value = value;
            best_k = static_cast<int>(k);
        }
    }
    if (!found) throw std::invalid_argument("recovery problem infeasible");

    std::vector<int> picked(inside_order.begin(), inside_order.begin() + best_k);
    picked.insert(picked.end(), outside_order.begin(), outside_order.begin() + (p - best_k));
    return {SelectionSolution::from_support(n, picked), best_value};
}

} // namespace robsel
