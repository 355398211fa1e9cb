// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <limits>
#include <string>
#include <vector>

#include "scenario.hpp"
#include "simplex.hpp"

namespace capex {

/// How investment costs enter the objective. The first two require a yearly
/// horizon (every year a milestone); the *_MILESTONE variants accept sparse
/// milestone sets.
enum class Variant {
    Total,
    Annualised,
    TotalSalvage,
    AnnualisedMilestone,
    TotalSalvageMilestone,
};

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& name);

struct VarKey {
    enum class Kind { Invest, Production };
    Kind kind = Kind::Invest;
    int tech = 0;
    int milestone = 0;
    int period = 0;    // production only
    int timestep = 0;  // production only
    auto operator<=>(const VarKey&) const = default;
};

/// The assembled planning LP: minimize c.v subject to the rows, v >= 0,
/// v <= upper (infinity = unbounded). The directory maps columns back to
/// model variables.
struct LinearProgram {
    struct Row {
        std::vector<double> coeffs;  // dense, one per column
        char sense = '<';            // '<', '=', '>'
        double rhs = 0.0;
    };

    std::vector<double> objective;
    std::vector<Row> rows;
    std::vector<double> upper;  // +inf when unbounded
    std::vector<VarKey> directory;

    int column_count() const { return static_cast<int>(objective.size()); }
    static constexpr double unbounded = std::numeric_limits<double>::infinity();
};

/// Objective coefficient of the investment variable x_{tech,milestone} under
/// the given variant (includes the social-rate discount to year 0).
double invest_coefficient(const Scenario& scenario, Variant variant, int tech,
                          int milestone);

/// Objective coefficient of a production variable; identical across variants.
double operational_coefficient(const Scenario& scenario, int tech, int milestone,
                               int period, int timestep);

LinearProgram build_lp(const Scenario& scenario, Variant variant);

simplex::StandardFormLP to_standard_form(const LinearProgram& lp);

/// Evaluates C^I + C^O for fixed decisions, no optimization. Levels are
/// parallel to build_lp's variable directory.
double objective_value(const Scenario& scenario, Variant variant,
                       const LinearProgram& lp, const std::vector<double>& levels);

struct CostBreakdown {
    struct InvestItem {
        int tech = 0;
        int milestone = 0;
        double capacity = 0.0;
        double discounted_cost = 0.0;
    };
    struct OperationalItem {
        int milestone = 0;
        double discounted_cost = 0.0;
    };
    std::vector<InvestItem> investment;
    std::vector<OperationalItem> operational;
    double investment_total = 0.0;
    double operational_total = 0.0;
    double total() const { return investment_total + operational_total; }
};

/// Itemizes the discounted costs of a feasible solution. Rejects solutions
/// violating any constraint by more than 1e-6 absolute.
CostBreakdown cost_breakdown(const Scenario& scenario, Variant variant,
                             const LinearProgram& lp,
                             const std::vector<double>& solution);

}  // namespace capex
