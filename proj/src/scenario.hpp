// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "finance.hpp"
#include "horizon.hpp"

namespace capex {

struct DemandKey {
    int milestone = 0;
    int period = 0;
    int timestep = 0;
    auto operator<=>(const DemandKey&) const = default;
};

/// Full planning problem instance: technologies, time structure, the social
/// discount rate, and the operational data (demand, variable costs, weights).
struct Scenario {
    std::vector<TechnologyParams> technologies;
    Horizon horizon{Horizon::yearly(0)};
    DiscountRate social_rate;

    std::map<DemandKey, double> demand;                       // MW
    std::map<std::pair<int, int>, double> operational_weights;  // (m, k) -> W^op
    std::vector<double> variable_cost;                        // per tech, currency/MWh
    std::vector<std::map<int, double>> variable_cost_overrides;  // per tech, by year

    std::vector<std::string> warnings;  // non-fatal diagnostics from loading

    double op_weight(int milestone, int period) const;
    double var_cost(size_t tech, int year) const;

    /// Cross-field checks; fills `warnings` (e.g. WACC below the social rate).
    void validate();
};

/// Parses and validates the versioned scenario document. Unknown keys are
/// rejected. Rates accept "2%" or 0.02.
Scenario load_scenario_json(const std::string& json_text);
Scenario load_scenario_file(const std::string& path);

}  // namespace capex
