// SPDX-License-Identifier: Apache-2.0
#include "report.hpp"

#include <charconv>

namespace capex {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

json run_report_json(const Scenario& scenario, Variant variant,
                     const LinearProgram& lp, const simplex::SolveResult& result) {
    json report;
    report["schema_version"] = 1;
    report["variant"] = variant_name(variant);
    report["status"] = simplex::status_name(result.status);
    report["iterations"] = result.iterations;

    if (result.status != simplex::SolveStatus::Optimal) return report;

    report["objective"] = result.objective;

    CostBreakdown bd = cost_breakdown(scenario, variant, lp, result.values);
    json investment = json::array();
    for (const auto& item : bd.investment) {
        investment.push_back({{"technology", scenario.technologies[item.tech].name},
                              {"milestone", item.milestone},
                              {"capacity", item.capacity},
                              {"discounted_cost", item.discounted_cost}});
    }
    json production = json::array();
    for (int c = 0; c < lp.column_count(); ++c) {
        const VarKey& key = lp.directory[c];
        if (key.kind != VarKey::Kind::Production) continue;
        production.push_back({{"technology", scenario.technologies[key.tech].name},
                              {"milestone", key.milestone},
                              {"period", key.period},
                              {"timestep", key.timestep},
                              {"value", result.values[c]}});
    }
    json operational = json::array();
    for (const auto& item : bd.operational) {
        operational.push_back(
            {{"milestone", item.milestone}, {"discounted_cost", item.discounted_cost}});
    }
    report["investment"] = std::move(investment);
    report["production"] = std::move(production);
    report["costs"] = {{"investment_total", bd.investment_total},
                       {"operational_total", bd.operational_total},
                       {"per_milestone_operational", std::move(operational)}};
    return report;
}

json equivalence_report_json(const EquivalenceReport& report) {
    return {{"schema_version", 1},
            {"kind", "equivalence"},
            {"variant_a", variant_name(report.variant_a)},
            {"variant_b", variant_name(report.variant_b)},
            {"max_coefficient_deviation", report.max_coefficient_deviation},
            {"max_objective_deviation", report.max_objective_deviation},
            {"threshold", report.threshold},
            {"verdict", report.pass ? "pass" : "fail"},
            {"status_a", simplex::status_name(report.status_a)},
            {"status_b", simplex::status_name(report.status_b)},
            {"objective_a", report.objective_a},
            {"objective_b", report.objective_b}};
}

json bias_report_json(const Scenario& scenario, const BiasReport& report) {
    json investment = json::array();
    for (const auto& e : report.investment) {
        investment.push_back({{"technology", scenario.technologies[e.tech].name},
                              {"milestone", e.milestone},
                              {"milestone_coefficient", e.milestone_coefficient},
                              {"exact_coefficient", e.exact_coefficient},
                              {"gap", e.gap},
                              {"lifetime_overcount_years", e.lifetime_overcount_years}});
    }
    json operational = json::array();
    for (const auto& e : report.operational) {
        operational.push_back({{"milestone", e.milestone},
                               {"milestone_factor", e.milestone_factor},
                               {"exact_factor", e.exact_factor},
                               {"gap", e.gap}});
    }
    return {{"schema_version", 1},
            {"kind", "bias"},
            {"investment", std::move(investment)},
            {"operational", std::move(operational)},
            {"optimum",
             {{"status", simplex::status_name(report.optimum_status)},
              {"milestone_objective", report.milestone_objective},
              {"exact_objective", report.exact_objective},
              {"gap", report.objective_gap}}}};
}

namespace {

void flatten(const json& node, const std::string& path, std::string& out) {
    if (node.is_object()) {
        for (auto it = node.begin(); it != node.end(); ++it) {
            flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
        }
    } else if (node.is_array()) {
        for (size_t i = 0; i < node.size(); ++i) {
            flatten(node[i], path + "[" + std::to_string(i) + "]", out);
        }
    } else {
        out += path;
        out += ',';
        if (node.is_number_float()) {
            out += format_double(node.get<double>());
        } else if (node.is_string()) {
            out += node.get<std::string>();
        } else {
            out += node.dump();
        }
        out += '\n';
    }
}

}  // namespace

std::string to_csv(const json& report) {
    std::string out = "path,value\n";
    flatten(report, "", out);
    return out;
}

}  // namespace capex
