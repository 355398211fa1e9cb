// SPDX-License-Identifier: Apache-2.0
#include "finance.hpp"

#include <cmath>
#include <cstdlib>

namespace capex {

DiscountRate::DiscountRate(double fraction) : value_(fraction) {
    if (!std::isfinite(fraction)) {
        throw ValidationError("discount rate must be finite");
    }
    if (fraction < 0.0) {
        throw ValidationError("negative discount rates are not supported");
    }
    if (fraction >= 1.0) {
        throw ValidationError(
            "discount rate must be a fraction < 1 (write 2% as \"2%\" or 0.02)");
    }
}

DiscountRate DiscountRate::parse(const std::string& text) {
    std::string s = text;
    bool percent = false;
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    if (!s.empty() && s.back() == '%') {
        percent = true;
        s.pop_back();
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    }
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || (end && *end != '\0')) {
        throw ValidationError("cannot parse rate: '" + text + "'");
    }
    if (percent) v /= 100.0;
    return DiscountRate(v);
}

double TechnologyParams::overnight_at(int year) const {
    auto it = overnight_overrides.find(year);
    return it != overnight_overrides.end() ? it->second : overnight_cost;
}

DiscountRate TechnologyParams::wacc_at(int year) const {
    auto it = wacc_overrides.find(year);
    return it != wacc_overrides.end() ? it->second : wacc;
}

double TechnologyParams::annualised_at(int year) const {
    bool overridden = overnight_overrides.count(year) || wacc_overrides.count(year);
    if (!overridden) return annualised_cost;
    return annualise(overnight_at(year), wacc_at(year), lifetime_years);
}

void TechnologyParams::finalize() {
    if (lifetime_years < 1) {
        throw ValidationError("technology '" + name + "': lifetime must be >= 1");
    }
    if (overnight_cost < 0.0 || annualised_cost < 0.0) {
        throw ValidationError("technology '" + name + "': costs must be >= 0");
    }
    bool has_total = overnight_cost > 0.0;
    bool has_annual = annualised_cost > 0.0;
    if (has_total && has_annual) {
        double implied = totalise(annualised_cost, wacc, lifetime_years);
        double denom = std::max(std::abs(overnight_cost), std::abs(implied));
        if (denom > 0.0 && std::abs(implied - overnight_cost) / denom > 1e-9) {
            throw ValidationError("technology '" + name +
                                  "': overnight and annualised costs are inconsistent");
        }
    } else if (has_total) {
        annualised_cost = annualise(overnight_cost, wacc, lifetime_years);
    } else if (has_annual) {
        overnight_cost = totalise(annualised_cost, wacc, lifetime_years);
    }
    if (max_invest && *max_invest < 0.0) {
        throw ValidationError("technology '" + name + "': max_invest must be >= 0");
    }
}

double discount_factor(DiscountRate rate, int periods) {
    if (periods < 0) throw ValidationError("discount_factor: periods must be >= 0");
    if (periods == 0) return 1.0;
    return std::pow(1.0 + rate.value(), -periods);
}

double annuity_factor(DiscountRate wacc, int lifetime, int first_period,
                      int last_period) {
    if (first_period < 0 || last_period < first_period || last_period > lifetime - 1) {
        throw ValidationError("annuity_factor: window outside [0, lifetime-1]");
    }
    double sum = 0.0;
    for (int n = first_period; n <= last_period; ++n) {
        sum += discount_factor(wacc, n);
    }
    return sum;
}

double annualise(double total_cost, DiscountRate wacc, int lifetime) {
    if (lifetime < 1) throw ValidationError("annualise: lifetime must be >= 1");
    if (total_cost < 0.0) throw ValidationError("annualise: total_cost must be >= 0");
    double w = wacc.value();
    if (w == 0.0) return total_cost / lifetime;  // analytic limit of the annuity formula
    // 1 - (1+w)^-LT via expm1/log1p; the naive form cancels badly for tiny w.
    double denom = -std::expm1(-static_cast<double>(lifetime) * std::log1p(w));
    return total_cost * w / ((1.0 + w) * denom);
}

double totalise(double annualised_cost, DiscountRate wacc, int lifetime) {
    if (lifetime < 1) throw ValidationError("totalise: lifetime must be >= 1");
    return annualised_cost * annuity_factor(wacc, lifetime, 0, lifetime - 1);
}

double salvage_value(const TechnologyParams& tech, int invest_year,
                     int last_modelled_year) {
    if (invest_year > last_modelled_year) {
        throw ValidationError("salvage_value: invest_year must be <= last modelled year");
    }
    int first = last_modelled_year + 1 - invest_year;
    int last = tech.lifetime_years - 1;
    if (first > last) return 0.0;  // lifetime ends inside the horizon
    return tech.annualised_at(invest_year) *
           annuity_factor(tech.wacc_at(invest_year), tech.lifetime_years, first, last);
}

}  // namespace capex
