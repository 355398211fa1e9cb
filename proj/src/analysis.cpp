// SPDX-License-Identifier: Apache-2.0
#include "analysis.hpp"

#include <algorithm>
#include <cmath>

namespace capex {

namespace {

double rel_dev(double a, double b) {
    double denom = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / denom;
}

}  // namespace

EquivalenceReport certify_equivalence(const Scenario& scenario, Variant variant_a,
                                      Variant variant_b, double threshold) {
    LinearProgram lp_a = build_lp(scenario, variant_a);
    LinearProgram lp_b = build_lp(scenario, variant_b);

    if (lp_a.directory != lp_b.directory || lp_a.rows.size() != lp_b.rows.size()) {
        throw ValidationError("certify_equivalence: variants produce different structures");
    }

    EquivalenceReport report;
    report.variant_a = variant_a;
    report.variant_b = variant_b;
    report.threshold = threshold;
    for (int c = 0; c < lp_a.column_count(); ++c) {
        if (lp_a.objective[c] == 0.0 && lp_b.objective[c] == 0.0) continue;
        report.max_coefficient_deviation = std::max(
            report.max_coefficient_deviation, rel_dev(lp_a.objective[c], lp_b.objective[c]));
    }

    auto result_a = simplex::solve(to_standard_form(lp_a));
    auto result_b = simplex::solve(to_standard_form(lp_b));
    report.status_a = result_a.status;
    report.status_b = result_b.status;
    if (result_a.status == simplex::SolveStatus::Optimal &&
        result_b.status == simplex::SolveStatus::Optimal) {
        report.objective_a = result_a.objective;
        report.objective_b = result_b.objective;
        if (result_a.objective != 0.0 || result_b.objective != 0.0) {
            report.max_objective_deviation = rel_dev(result_a.objective, result_b.objective);
        }
    }

    report.pass = report.status_a == report.status_b &&
                  report.max_coefficient_deviation <= threshold &&
                  report.max_objective_deviation <= threshold;
    return report;
}

double exact_invest_coefficient(const Scenario& scenario, int tech, int milestone) {
    const TechnologyParams& t = scenario.technologies.at(tech);
    const Horizon& horizon = scenario.horizon;
    auto window = capacity_window(milestone, t.lifetime_years, horizon);
    DiscountRate wacc = t.wacc_at(milestone);
    // Same represented years as the milestone pricing, but each year carries
    // its own discount factor instead of its block representative's.
    double sum = 0.0;
    for (int j : window.active_milestones) {
        int idx = horizon.milestone_index(j);
        for (int year = j; year <= horizon.block_end(idx); ++year) {
            sum += discount_factor(wacc, year - milestone);
        }
    }
    return discount_factor(scenario.social_rate, milestone) *
           t.annualised_at(milestone) * sum;
}

BiasReport quantify_milestone_bias(const Scenario& scenario) {
    const Horizon& horizon = scenario.horizon;
    BiasReport report;

    for (size_t a = 0; a < scenario.technologies.size(); ++a) {
        const auto& t = scenario.technologies[a];
        for (int m : horizon.milestones()) {
            BiasReport::InvestmentEntry entry;
            entry.tech = static_cast<int>(a);
            entry.milestone = m;
            entry.milestone_coefficient =
                invest_coefficient(scenario, Variant::AnnualisedMilestone,
                                   static_cast<int>(a), m);
            entry.exact_coefficient =
                exact_invest_coefficient(scenario, static_cast<int>(a), m);
            entry.gap = entry.milestone_coefficient - entry.exact_coefficient;
            entry.lifetime_overcount_years =
                detect_lifetime_gap(m, t.lifetime_years, horizon).overcounted_years;
            report.investment.push_back(entry);
        }
    }

    for (size_t i = 0; i < horizon.milestones().size(); ++i) {
        int m = horizon.milestones()[i];
        BiasReport::OperationalEntry entry;
        entry.milestone = m;
        entry.milestone_factor =
            discount_factor(scenario.social_rate, m) * horizon.weights()[i];
        double exact = 0.0;
        for (int year = m; year <= horizon.block_end(static_cast<int>(i)); ++year) {
            exact += discount_factor(scenario.social_rate, year);
        }
        entry.exact_factor = exact;
        entry.gap = entry.milestone_factor - entry.exact_factor;
        report.operational.push_back(entry);
    }

    // Objective-level bias at the annualised-milestone optimum, plan fixed.
    LinearProgram lp = build_lp(scenario, Variant::AnnualisedMilestone);
    auto solved = simplex::solve(to_standard_form(lp));
    report.optimum_status = solved.status;
    if (solved.status == simplex::SolveStatus::Optimal) {
        report.milestone_objective = solved.objective;
        double exact = 0.0;
        for (int c = 0; c < lp.column_count(); ++c) {
            const VarKey& key = lp.directory[c];
            if (solved.values[c] == 0.0) continue;
            if (key.kind == VarKey::Kind::Invest) {
                exact += exact_invest_coefficient(scenario, key.tech, key.milestone) *
                         solved.values[c];
            } else {
                int idx = horizon.milestone_index(key.milestone);
                double factor = 0.0;
                for (int year = key.milestone; year <= horizon.block_end(idx); ++year) {
                    factor += discount_factor(scenario.social_rate, year);
                }
                exact += factor * scenario.var_cost(key.tech, key.milestone) *
                         scenario.op_weight(key.milestone, key.period) * solved.values[c];
            }
        }
        report.exact_objective = exact;
        report.objective_gap = report.milestone_objective - report.exact_objective;
    }
    return report;
}

}  // namespace capex
