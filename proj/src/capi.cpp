// SPDX-License-Identifier: Apache-2.0
#include "capexplan/capexplan.h"

#include <cstring>
#include <string>

#include "analysis.hpp"
#include "model.hpp"
#include "report.hpp"
#include "scenario.hpp"
#include "simplex.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

template <typename Fn>
cx_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const capex::ValidationError& e) {
        set_error(e.what());
        return CX_ERR_VALIDATION;
    } catch (const std::exception& e) {
        set_error(e.what());
        return CX_ERR_INTERNAL;
    }
}

capex::Variant to_variant(cx_variant v) {
    switch (v) {
        case CX_VARIANT_TOTAL: return capex::Variant::Total;
        case CX_VARIANT_ANNUALISED: return capex::Variant::Annualised;
        case CX_VARIANT_TOTAL_SALVAGE: return capex::Variant::TotalSalvage;
        case CX_VARIANT_ANNUALISED_MILESTONE: return capex::Variant::AnnualisedMilestone;
        case CX_VARIANT_TOTAL_SALVAGE_MILESTONE:
            return capex::Variant::TotalSalvageMilestone;
    }
    throw capex::ValidationError("invalid variant value");
}

}  // namespace

struct cx_scenario {
    capex::Scenario scenario;
};

struct cx_result {
    cx_solve_status solve_status = CX_SOLVE_FAILURE;
    double objective = 0.0;
    int equivalence_verdict = -1;  // -1 when not a comparison
    nlohmann::json report;
};

extern "C" {

const char* cx_last_error(void) { return g_last_error.c_str(); }

cx_status cx_rate_parse(const char* text, double* out) {
    if (!text || !out) {
        set_error("null argument");
        return CX_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        *out = capex::DiscountRate::parse(text).value();
        return CX_OK;
    });
}

cx_status cx_discount_factor(double rate, int periods, double* out) {
    if (!out) return CX_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = capex::discount_factor(capex::DiscountRate(rate), periods);
        return CX_OK;
    });
}

cx_status cx_annuity_factor(double wacc, int lifetime, int first_period,
                            int last_period, double* out) {
    if (!out) return CX_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = capex::annuity_factor(capex::DiscountRate(wacc), lifetime, first_period,
                                     last_period);
        return CX_OK;
    });
}

cx_status cx_annualise(double total_cost, double wacc, int lifetime, double* out) {
    if (!out) return CX_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = capex::annualise(total_cost, capex::DiscountRate(wacc), lifetime);
        return CX_OK;
    });
}

cx_status cx_totalise(double annualised_cost, double wacc, int lifetime, double* out) {
    if (!out) return CX_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = capex::totalise(annualised_cost, capex::DiscountRate(wacc), lifetime);
        return CX_OK;
    });
}

cx_status cx_salvage_value(double total_cost, double wacc, int lifetime,
                           int invest_year, int last_modelled_year, double* out) {
    if (!out) return CX_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        capex::TechnologyParams tech;
        tech.name = "<cx_salvage_value>";
        tech.overnight_cost = total_cost;
        tech.wacc = capex::DiscountRate(wacc);
        tech.lifetime_years = lifetime;
        tech.finalize();
        *out = capex::salvage_value(tech, invest_year, last_modelled_year);
        return CX_OK;
    });
}

cx_status cx_milestone_weights(const int* milestones, int count, int horizon_end,
                               int* out_weights) {
    if (!milestones || !out_weights || count <= 0) {
        set_error("null or empty milestone list");
        return CX_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        std::vector<int> m(milestones, milestones + count);
        auto weights = capex::derive_milestone_weights(m, horizon_end);
        std::memcpy(out_weights, weights.data(), weights.size() * sizeof(int));
        return CX_OK;
    });
}

cx_status cx_scenario_load_file(const char* path, cx_scenario** out) {
    if (!path || !out) return CX_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        auto scenario = capex::load_scenario_file(path);
        *out = new cx_scenario{std::move(scenario)};
        return CX_OK;
    });
}

cx_status cx_scenario_load_string(const char* json_text, cx_scenario** out) {
    if (!json_text || !out) return CX_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        auto scenario = capex::load_scenario_json(json_text);
        *out = new cx_scenario{std::move(scenario)};
        return CX_OK;
    });
}

int cx_scenario_warning_count(const cx_scenario* scenario) {
    return scenario ? static_cast<int>(scenario->scenario.warnings.size()) : 0;
}

const char* cx_scenario_warning(const cx_scenario* scenario, int index) {
    if (!scenario || index < 0 ||
        index >= static_cast<int>(scenario->scenario.warnings.size())) {
        return nullptr;
    }
    return scenario->scenario.warnings[index].c_str();
}

void cx_scenario_free(cx_scenario* scenario) { delete scenario; }

cx_status cx_variant_parse(const char* name, cx_variant* out) {
    if (!name || !out) return CX_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        switch (capex::variant_from_name(name)) {
            case capex::Variant::Total: *out = CX_VARIANT_TOTAL; break;
            case capex::Variant::Annualised: *out = CX_VARIANT_ANNUALISED; break;
            case capex::Variant::TotalSalvage: *out = CX_VARIANT_TOTAL_SALVAGE; break;
            case capex::Variant::AnnualisedMilestone:
                *out = CX_VARIANT_ANNUALISED_MILESTONE;
                break;
            case capex::Variant::TotalSalvageMilestone:
                *out = CX_VARIANT_TOTAL_SALVAGE_MILESTONE;
                break;
        }
        return CX_OK;
    });
}

cx_status cx_solve(const cx_scenario* scenario, cx_variant variant, cx_result** out) {
    if (!scenario || !out) return CX_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        capex::Variant v = to_variant(variant);
        auto lp = capex::build_lp(scenario->scenario, v);
        auto solved = capex::simplex::solve(capex::to_standard_form(lp));
        auto result = new cx_result;
        result->solve_status = static_cast<cx_solve_status>(solved.status);
        result->objective = solved.objective;
        result->report = capex::run_report_json(scenario->scenario, v, lp, solved);
        *out = result;
        return CX_OK;
    });
}

cx_status cx_compare(const cx_scenario* scenario, cx_variant variant_a,
                     cx_variant variant_b, double threshold, cx_result** out) {
    if (!scenario || !out) return CX_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        auto report = capex::certify_equivalence(scenario->scenario, to_variant(variant_a),
                                                 to_variant(variant_b),
                                                 threshold > 0.0 ? threshold : 1e-9);
        auto bias = capex::quantify_milestone_bias(scenario->scenario);
        auto result = new cx_result;
        result->solve_status =
            report.status_a == capex::simplex::SolveStatus::Optimal &&
                    report.status_b == capex::simplex::SolveStatus::Optimal
                ? CX_SOLVE_OPTIMAL
                : static_cast<cx_solve_status>(report.status_a);
        result->objective = report.objective_a;
        result->equivalence_verdict = report.pass ? 1 : 0;
        result->report = {{"schema_version", 1},
                          {"kind", "comparison"},
                          {"equivalence", capex::equivalence_report_json(report)},
                          {"bias", capex::bias_report_json(scenario->scenario, bias)}};
        *out = result;
        return CX_OK;
    });
}

cx_status cx_bias(const cx_scenario* scenario, cx_result** out) {
    if (!scenario || !out) return CX_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        auto bias = capex::quantify_milestone_bias(scenario->scenario);
        auto result = new cx_result;
        result->solve_status = static_cast<cx_solve_status>(bias.optimum_status);
        result->objective = bias.milestone_objective;
        result->report = capex::bias_report_json(scenario->scenario, bias);
        *out = result;
        return CX_OK;
    });
}

cx_solve_status cx_result_solve_status(const cx_result* result) {
    return result ? result->solve_status : CX_SOLVE_FAILURE;
}

double cx_result_objective(const cx_result* result) {
    return result ? result->objective : 0.0;
}

int cx_result_equivalence_verdict(const cx_result* result) {
    return result ? result->equivalence_verdict : -1;
}

cx_status cx_result_render(const cx_result* result, cx_format format, char** out) {
    if (!result || !out) return CX_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        std::string text = format == CX_FORMAT_CSV ? capex::to_csv(result->report)
                                                   : result->report.dump(2) + "\n";
        char* buffer = new char[text.size() + 1];
        std::memcpy(buffer, text.c_str(), text.size() + 1);
        *out = buffer;
        return CX_OK;
    });
}

void cx_string_free(char* text) { delete[] text; }

void cx_result_free(cx_result* result) { delete result; }

}  // extern "C"
