#pragma once

#include <cstdint>
#include <vector>

namespace pfolio {

// Discretization the attainment tensor lives on: budget levels, precision
// thresholds (objective-gap targets, stored in decreasing order) and the
// total budget a portfolio may spend.
struct Grid {
    std::vector<std::int64_t> budgets;   // strictly increasing, all >= 1
    std::vector<double> precisions;      // strictly decreasing, all > 0
    std::int64_t total_budget = 0;

    // Throws ConfigError when an invariant is broken.
    void validate() const;

    // Index of budget b; -1 when b is not a grid budget.
    int budget_index(std::int64_t b) const;

    // Largest grid budget <= limit; throws ConfigError when none exists.
    std::int64_t largest_budget_at_most(std::int64_t limit) const;

    std::int64_t max_budget() const { return budgets.back(); }
    std::int64_t min_budget() const { return budgets.front(); }
};

// B = {500*j : j <= kmax}, T = 500*kmax, E = {10^(2 - x/5) : x = 0..50}.
Grid grid_preset_main(int kmax = 20);

// B = {200*k : k = 1..50}, T = 10000, E = {10^(2 - x/10) : x = 0..100}.
Grid grid_preset_analysis();

std::vector<double> log_precision_levels(double denominator, int steps);

}  // namespace pfolio
