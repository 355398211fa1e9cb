// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "model.hpp"
#include "simplex.hpp"

namespace capex {

/// Machine-checkable certificate that two objective variants price the same
/// scenario identically (or not).
struct EquivalenceReport {
    Variant variant_a = Variant::Total;
    Variant variant_b = Variant::Annualised;
    double max_coefficient_deviation = 0.0;  // relative
    double max_objective_deviation = 0.0;    // relative, at the two optima
    double threshold = 1e-9;
    bool pass = false;
    simplex::SolveStatus status_a = simplex::SolveStatus::Failure;
    simplex::SolveStatus status_b = simplex::SolveStatus::Failure;
    double objective_a = 0.0;
    double objective_b = 0.0;
};

EquivalenceReport certify_equivalence(const Scenario& scenario, Variant variant_a,
                                      Variant variant_b, double threshold = 1e-9);

/// Quantifies the milestone-weighting approximation against an exact yearly
/// expansion: non-modelled years inherit the nearest preceding milestone's
/// decisions and unit costs but are discounted at their true year index.
struct BiasReport {
    struct InvestmentEntry {
        int tech = 0;
        int milestone = 0;
        double milestone_coefficient = 0.0;  // annualised-milestone pricing
        double exact_coefficient = 0.0;      // yearly expansion of the same plan
        double gap = 0.0;                    // milestone - exact, >= 0 for wacc > 0
        int lifetime_overcount_years = 0;    // from detect_lifetime_gap
    };
    struct OperationalEntry {
        int milestone = 0;
        double milestone_factor = 0.0;  // (1+R)^-m * W_m
        double exact_factor = 0.0;      // sum of (1+R)^-t over the block
        double gap = 0.0;
    };
    std::vector<InvestmentEntry> investment;
    std::vector<OperationalEntry> operational;

    // Objective-level bias at the solved annualised-milestone optimum,
    // holding the plan fixed.
    simplex::SolveStatus optimum_status = simplex::SolveStatus::Failure;
    double milestone_objective = 0.0;
    double exact_objective = 0.0;
    double objective_gap = 0.0;
};

BiasReport quantify_milestone_bias(const Scenario& scenario);

/// Exact yearly counterpart of the annualised-milestone investment
/// coefficient (exposed for the bias oracle tests).
double exact_invest_coefficient(const Scenario& scenario, int tech, int milestone);

}  // namespace capex
