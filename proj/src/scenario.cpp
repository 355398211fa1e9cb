// SPDX-License-Identifier: Apache-2.0
#include "scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace capex {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key())) {
            throw ValidationError("unknown key '" + it.key() + "' in " + where);
        }
    }
}

DiscountRate parse_rate(const json& value, const std::string& where) {
    if (value.is_string()) return DiscountRate::parse(value.get<std::string>());
    if (value.is_number()) return DiscountRate(value.get<double>());
    throw ValidationError(where + ": rate must be a number or a percent string");
}

double require_number(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key) || !obj.at(key).is_number()) {
        throw ValidationError(where + ": missing or non-numeric '" + key + "'");
    }
    return obj.at(key).get<double>();
}

int require_int(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key) || !obj.at(key).is_number_integer()) {
        throw ValidationError(where + ": missing or non-integer '" + key + "'");
    }
    return obj.at(key).get<int>();
}

TechnologyParams parse_technology(const json& t, Scenario& scenario) {
    reject_unknown_keys(t,
                        {"name", "overnight_cost", "annualised_cost", "wacc", "lifetime",
                         "max_invest", "variable_cost", "variable_cost_by_year",
                         "overrides"},
                        "technology");
    TechnologyParams tech;
    if (!t.contains("name") || !t.at("name").is_string()) {
        throw ValidationError("technology: missing 'name'");
    }
    tech.name = t.at("name").get<std::string>();
    std::string where = "technology '" + tech.name + "'";

    if (t.contains("overnight_cost")) tech.overnight_cost = require_number(t, "overnight_cost", where);
    if (t.contains("annualised_cost")) tech.annualised_cost = require_number(t, "annualised_cost", where);
    if (!t.contains("overnight_cost") && !t.contains("annualised_cost")) {
        throw ValidationError(where + ": needs overnight_cost or annualised_cost");
    }
    if (t.contains("wacc")) tech.wacc = parse_rate(t.at("wacc"), where);
    tech.lifetime_years = require_int(t, "lifetime", where);
    if (t.contains("max_invest")) tech.max_invest = require_number(t, "max_invest", where);

    if (t.contains("overrides")) {
        const json& ov = t.at("overrides");
        if (!ov.is_object()) throw ValidationError(where + ": overrides must be an object");
        for (auto it = ov.begin(); it != ov.end(); ++it) {
            int year = std::stoi(it.key());
            reject_unknown_keys(it.value(), {"overnight_cost", "wacc"},
                                where + " override");
            if (it.value().contains("overnight_cost")) {
                tech.overnight_overrides[year] =
                    require_number(it.value(), "overnight_cost", where);
            }
            if (it.value().contains("wacc")) {
                tech.wacc_overrides[year] = parse_rate(it.value().at("wacc"), where);
            }
        }
    }

    double vc = t.contains("variable_cost") ? require_number(t, "variable_cost", where) : 0.0;
    scenario.variable_cost.push_back(vc);
    std::map<int, double> vc_by_year;
    if (t.contains("variable_cost_by_year")) {
        for (auto it = t.at("variable_cost_by_year").begin();
             it != t.at("variable_cost_by_year").end(); ++it) {
            vc_by_year[std::stoi(it.key())] = it.value().get<double>();
        }
    }
    scenario.variable_cost_overrides.push_back(std::move(vc_by_year));

    tech.finalize();
    return tech;
}

}  // namespace

double Scenario::op_weight(int milestone, int period) const {
    auto it = operational_weights.find({milestone, period});
    return it != operational_weights.end() ? it->second : 1.0;
}

double Scenario::var_cost(size_t tech, int year) const {
    const auto& overrides = variable_cost_overrides[tech];
    auto it = overrides.find(year);
    return it != overrides.end() ? it->second : variable_cost[tech];
}

void Scenario::validate() {
    if (technologies.empty()) throw ValidationError("scenario has no technologies");
    for (const auto& [key, value] : demand) {
        if (value < 0.0) throw ValidationError("demand must be >= 0");
        if (!horizon.is_milestone(key.milestone)) {
            throw ValidationError("demand references non-milestone year " +
                                  std::to_string(key.milestone));
        }
    }
    for (const auto& [key, w] : operational_weights) {
        if (w <= 0.0) throw ValidationError("operational weights must be > 0");
        if (!horizon.is_milestone(key.first)) {
            throw ValidationError("operational weight references non-milestone year " +
                                  std::to_string(key.first));
        }
    }
    for (const auto& tech : technologies) {
        if (tech.wacc.value() < social_rate.value()) {
            warnings.push_back("technology '" + tech.name +
                               "': WACC is below the social discount rate");
        }
        for (const auto& [year, rate] : tech.wacc_overrides) {
            if (rate.value() < social_rate.value()) {
                warnings.push_back("technology '" + tech.name + "': WACC override for year " +
                                   std::to_string(year) +
                                   " is below the social discount rate");
            }
        }
    }
}

Scenario load_scenario_json(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("scenario root must be an object");
    reject_unknown_keys(doc,
                        {"schema_version", "horizon", "discounting", "technologies",
                         "demand", "operational_weights"},
                        "scenario");
    if (!doc.contains("schema_version") || doc.at("schema_version") != 1) {
        throw ValidationError("scenario requires \"schema_version\": 1");
    }

    Scenario s;

    if (!doc.contains("horizon")) throw ValidationError("scenario: missing 'horizon'");
    const json& h = doc.at("horizon");
    reject_unknown_keys(h, {"end", "milestones", "weights"}, "horizon");
    int end = require_int(h, "end", "horizon");
    std::vector<int> milestones;
    if (h.contains("milestones")) {
        milestones = h.at("milestones").get<std::vector<int>>();
    } else {
        for (int y = 0; y <= end; ++y) milestones.push_back(y);
    }
    std::optional<std::vector<int>> weights;
    if (h.contains("weights")) weights = h.at("weights").get<std::vector<int>>();
    s.horizon = Horizon::make(end, std::move(milestones), std::move(weights));

    if (doc.contains("discounting")) {
        const json& d = doc.at("discounting");
        reject_unknown_keys(d, {"social_rate"}, "discounting");
        if (d.contains("social_rate")) {
            s.social_rate = parse_rate(d.at("social_rate"), "discounting");
        }
    }

    if (!doc.contains("technologies") || !doc.at("technologies").is_array()) {
        throw ValidationError("scenario: missing 'technologies' array");
    }
    for (const json& t : doc.at("technologies")) {
        s.technologies.push_back(parse_technology(t, s));
    }

    if (doc.contains("demand")) {
        for (const json& rec : doc.at("demand")) {
            reject_unknown_keys(rec, {"milestone", "period", "timestep", "value"},
                                "demand record");
            DemandKey key{require_int(rec, "milestone", "demand"),
                          require_int(rec, "period", "demand"),
                          require_int(rec, "timestep", "demand")};
            if (s.demand.count(key)) throw ValidationError("duplicate demand record");
            s.demand[key] = require_number(rec, "value", "demand");
        }
    }

    if (doc.contains("operational_weights")) {
        for (const json& rec : doc.at("operational_weights")) {
            reject_unknown_keys(rec, {"milestone", "period", "weight"},
                                "operational weight record");
            std::pair<int, int> key{require_int(rec, "milestone", "operational_weights"),
                                    require_int(rec, "period", "operational_weights")};
            s.operational_weights[key] = require_number(rec, "weight", "operational_weights");
        }
    }

    s.validate();
    return s;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open scenario file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return load_scenario_json(buf.str());
}

}  // namespace capex
