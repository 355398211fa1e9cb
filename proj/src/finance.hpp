// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace capex {

/// Raised when input data violates a documented precondition or schema rule.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A per-year discount rate stored as a fraction (0.02 means 2%/yr).
/// Negative rates and rates >= 1 are rejected at construction.
class DiscountRate {
public:
    DiscountRate() = default;
    explicit DiscountRate(double fraction);

    /// Accepts "2%", "2 %", "0.02" -- percent suffix divides by 100.
    static DiscountRate parse(const std::string& text);

    double value() const { return value_; }

private:
    double value_ = 0.0;
};

/// Per-technology investment cost data. Overnight and annualised costs are
/// kept mutually consistent: supply one and the other is derived; supply both
/// and they must agree to 1e-9 relative.
struct TechnologyParams {
    std::string name;
    double overnight_cost = 0.0;
    double annualised_cost = 0.0;
    DiscountRate wacc;
    int lifetime_years = 1;
    std::optional<double> max_invest;  // MW; nullopt = unbounded

    // Per-investment-year overrides (costs and financing conditions may
    // change over the horizon).
    std::map<int, double> overnight_overrides;
    std::map<int, DiscountRate> wacc_overrides;

    double overnight_at(int year) const;
    DiscountRate wacc_at(int year) const;
    /// Annualised cost for an investment made in `year`; recomputed from the
    /// overridden overnight cost / wacc when either is overridden.
    double annualised_at(int year) const;

    /// Derives the missing cost field and checks consistency when both are
    /// supplied. Call once after filling the fields.
    void finalize();
};

/// (1+rate)^(-periods); exactly 1 for periods = 0.
double discount_factor(DiscountRate rate, int periods);

/// Sum of discount factors over the window [first_period, last_period],
/// period 0 being the (undiscounted) investment year. The window must lie
/// inside [0, lifetime-1].
double annuity_factor(DiscountRate wacc, int lifetime, int first_period,
                      int last_period);

/// Constant annuity whose discounted sum over the lifetime equals
/// `total_cost`. Zero wacc yields the analytic limit total_cost / lifetime.
double annualise(double total_cost, DiscountRate wacc, int lifetime);

/// Inverse of annualise: discounted sum of a constant annuity over the
/// lifetime.
double totalise(double annualised_cost, DiscountRate wacc, int lifetime);

/// Discounted value (referenced to the investment year) of the annuities
/// falling beyond the last modelled year. Zero when the lifetime ends inside
/// the horizon.
double salvage_value(const TechnologyParams& tech, int invest_year,
                     int last_modelled_year);

}  // namespace capex
