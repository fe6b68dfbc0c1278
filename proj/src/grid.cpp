#include "pfolio/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pfolio/errors.hpp"

namespace pfolio {

void Grid::validate() const {
    if (budgets.empty()) throw ConfigError("grid has no budget levels");
    if (precisions.empty()) throw ConfigError("grid has no precision levels");
    if (budgets.front() < 1) throw ConfigError("grid budgets must be >= 1");
    for (std::size_t i = 1; i < budgets.size(); ++i) {
        if (budgets[i] <= budgets[i - 1])
            throw ConfigError("grid budgets must be strictly increasing");
    }
    if (precisions.front() <= 0.0) throw ConfigError("grid precisions must be > 0");
    for (std::size_t i = 1; i < precisions.size(); ++i) {
        if (precisions[i] >= precisions[i - 1] || precisions[i] <= 0.0)
            throw ConfigError("grid precisions must be strictly decreasing and > 0");
    }
    if (total_budget < budgets.front())
        throw ConfigError("total budget " + std::to_string(total_budget) +
                          " is below the smallest grid budget " + std::to_string(budgets.front()));
}

int Grid::budget_index(std::int64_t b) const {
    const auto it = std::lower_bound(budgets.begin(), budgets.end(), b);
    if (it == budgets.end() || *it != b) return -1;
    return static_cast<int>(it - budgets.begin());
}

std::int64_t Grid::largest_budget_at_most(std::int64_t limit) const {
    const auto it = std::upper_bound(budgets.begin(), budgets.end(), limit);
    if (it == budgets.begin())
        throw ConfigError("no grid budget fits within " + std::to_string(limit));
    return *(it - 1);
}

std::vector<double> log_precision_levels(double denominator, int steps) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(steps) + 1);
    for (int x = 0; x <= steps; ++x) {
        out.push_back(std::pow(10.0, 2.0 - static_cast<double>(x) / denominator));
    }
    return out;
}

Grid grid_preset_main(int kmax) {
    if (kmax < 1) throw ConfigError("grid preset requires kmax >= 1");
    Grid g;
    for (int j = 1; j <= kmax; ++j) g.budgets.push_back(500ll * j);
    g.precisions = log_precision_levels(5.0, 50);
    g.total_budget = 500ll * kmax;
    g.validate();
    return g;
}

Grid grid_preset_analysis() {
    Grid g;
    for (int k = 1; k <= 50; ++k) g.budgets.push_back(200ll * k);
    g.precisions = log_precision_levels(10.0, 100);
    g.total_budget = 10000;
    g.validate();
    return g;
}

}  // namespace pfolio
