// SPDX-License-Identifier: Apache-2.0
//
// Exercises the shared-library surface through the C header only: no C++
// internals, just opaque handles and status codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "capexplan/capexplan.h"

namespace {

const char* kScenario = R"({
  "schema_version": 1,
  "horizon": { "end": 5, "milestones": [0, 2, 5] },
  "discounting": { "social_rate": "2%" },
  "technologies": [
    { "name": "gen", "overnight_cost": 100.0, "wacc": "5%", "lifetime": 6,
      "max_invest": 50.0, "variable_cost": 3.0 }
  ],
  "demand": [
    { "milestone": 0, "period": 0, "timestep": 0, "value": 10.0 },
    { "milestone": 2, "period": 0, "timestep": 0, "value": 12.0 },
    { "milestone": 5, "period": 0, "timestep": 0, "value": 15.0 }
  ]
})";

}  // namespace

TEST_CASE("scalar operations") {
    double v = 0.0;
    REQUIRE(cx_rate_parse("2%", &v) == CX_OK);
    CHECK(v == doctest::Approx(0.02));

    REQUIRE(cx_annualise(100.0, 0.02, 5, &v) == CX_OK);
    CHECK(v == doctest::Approx(20.80).epsilon(0.00025));
    REQUIRE(cx_annualise(100.0, 0.05, 8, &v) == CX_OK);
    CHECK(v == doctest::Approx(14.74).epsilon(0.00035));

    REQUIRE(cx_totalise(20.0, 0.0, 5, &v) == CX_OK);
    CHECK(v == doctest::Approx(100.0));

    REQUIRE(cx_salvage_value(100.0, 0.05, 8, 0, 4, &v) == CX_OK);
    CHECK(v == doctest::Approx(33.01).epsilon(0.00016));
    REQUIRE(cx_salvage_value(100.0, 0.05, 4, 0, 4, &v) == CX_OK);
    CHECK(v == 0.0);

    REQUIRE(cx_discount_factor(0.02, 0, &v) == CX_OK);
    CHECK(v == 1.0);
    REQUIRE(cx_annuity_factor(0.0, 5, 0, 4, &v) == CX_OK);
    CHECK(v == 5.0);
}

TEST_CASE("errors surface through status codes and cx_last_error") {
    double v = 0.0;
    CHECK(cx_rate_parse("nonsense", &v) == CX_ERR_VALIDATION);
    CHECK(std::strlen(cx_last_error()) > 0);
    CHECK(cx_rate_parse(nullptr, &v) == CX_ERR_INVALID_ARGUMENT);
    CHECK(cx_annuity_factor(0.05, 8, 5, 8, &v) == CX_ERR_VALIDATION);
    CHECK(cx_salvage_value(100.0, 0.05, 8, 5, 4, &v) == CX_ERR_VALIDATION);

    cx_scenario* scenario = nullptr;
    CHECK(cx_scenario_load_string("{ not json", &scenario) == CX_ERR_VALIDATION);
    CHECK(cx_scenario_load_file("/no/such/file.json", &scenario) == CX_ERR_VALIDATION);
}

TEST_CASE("milestone weights") {
    int milestones[3] = {0, 2, 5};
    int weights[3] = {0, 0, 0};
    REQUIRE(cx_milestone_weights(milestones, 3, 5, weights) == CX_OK);
    CHECK(weights[0] == 2);
    CHECK(weights[1] == 3);
    CHECK(weights[2] == 1);

    int bad[2] = {1, 2};
    CHECK(cx_milestone_weights(bad, 2, 5, weights) == CX_ERR_VALIDATION);
}

TEST_CASE("scenario lifecycle, solve and render") {
    cx_scenario* scenario = nullptr;
    REQUIRE(cx_scenario_load_string(kScenario, &scenario) == CX_OK);
    CHECK(cx_scenario_warning_count(scenario) == 0);

    cx_variant variant;
    REQUIRE(cx_variant_parse("annualised-milestone", &variant) == CX_OK);
    CHECK(variant == CX_VARIANT_ANNUALISED_MILESTONE);
    CHECK(cx_variant_parse("bogus", &variant) == CX_ERR_VALIDATION);

    cx_result* result = nullptr;
    REQUIRE(cx_solve(scenario, CX_VARIANT_ANNUALISED_MILESTONE, &result) == CX_OK);
    CHECK(cx_result_solve_status(result) == CX_SOLVE_OPTIMAL);
    CHECK(cx_result_objective(result) > 0.0);

    char* json_text = nullptr;
    REQUIRE(cx_result_render(result, CX_FORMAT_JSON, &json_text) == CX_OK);
    CHECK(std::string(json_text).find("\"status\": \"OPTIMAL\"") != std::string::npos);
    cx_string_free(json_text);

    char* csv_text = nullptr;
    REQUIRE(cx_result_render(result, CX_FORMAT_CSV, &csv_text) == CX_OK);
    CHECK(std::string(csv_text).rfind("path,value\n", 0) == 0);
    cx_string_free(csv_text);

    // yearly-only variant on the sparse horizon is a validation error
    cx_result* rejected = nullptr;
    CHECK(cx_solve(scenario, CX_VARIANT_TOTAL, &rejected) == CX_ERR_VALIDATION);

    cx_result_free(result);
    cx_scenario_free(scenario);
}

TEST_CASE("compare and bias handles") {
    cx_scenario* scenario = nullptr;
    REQUIRE(cx_scenario_load_string(kScenario, &scenario) == CX_OK);

    cx_result* comparison = nullptr;
    REQUIRE(cx_compare(scenario, CX_VARIANT_ANNUALISED_MILESTONE,
                       CX_VARIANT_TOTAL_SALVAGE_MILESTONE, 1e-9, &comparison) == CX_OK);
    CHECK(cx_result_equivalence_verdict(comparison) == 0);  // milestone variants differ
    char* text = nullptr;
    REQUIRE(cx_result_render(comparison, CX_FORMAT_JSON, &text) == CX_OK);
    CHECK(std::string(text).find("\"verdict\": \"fail\"") != std::string::npos);
    cx_string_free(text);
    cx_result_free(comparison);

    cx_result* bias = nullptr;
    REQUIRE(cx_bias(scenario, &bias) == CX_OK);
    CHECK(cx_result_equivalence_verdict(bias) == -1);
    REQUIRE(cx_result_render(bias, CX_FORMAT_JSON, &text) == CX_OK);
    CHECK(std::string(text).find("\"kind\": \"bias\"") != std::string::npos);
    cx_string_free(text);
    cx_result_free(bias);

    cx_scenario_free(scenario);
}
