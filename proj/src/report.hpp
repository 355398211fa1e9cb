// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include <json.hpp>

#include "analysis.hpp"
#include "model.hpp"

namespace capex {

/// Machine-readable run report. All numbers carry full (round-trip) precision;
/// no timestamps inside the payload so identical runs produce identical bytes.
nlohmann::json run_report_json(const Scenario& scenario, Variant variant,
                               const LinearProgram& lp,
                               const simplex::SolveResult& result);

nlohmann::json equivalence_report_json(const EquivalenceReport& report);

nlohmann::json bias_report_json(const Scenario& scenario, const BiasReport& report);

/// Flattens a report to a delimited table: one `path,value` row per leaf,
/// full-precision numbers.
std::string to_csv(const nlohmann::json& report);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace capex
