// SPDX-License-Identifier: Apache-2.0
#include "model.hpp"

#include <cmath>

namespace capex {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::Total: return "total";
        case Variant::Annualised: return "annualised";
        case Variant::TotalSalvage: return "total-salvage";
        case Variant::AnnualisedMilestone: return "annualised-milestone";
        case Variant::TotalSalvageMilestone: return "total-salvage-milestone";
    }
    return "?";
}

Variant variant_from_name(const std::string& name) {
    for (Variant v : {Variant::Total, Variant::Annualised, Variant::TotalSalvage,
                      Variant::AnnualisedMilestone, Variant::TotalSalvageMilestone}) {
        if (name == variant_name(v)) return v;
    }
    throw ValidationError("unknown objective variant: '" + name + "'");
}

namespace {

bool yearly_only(Variant v) {
    return v == Variant::Total || v == Variant::Annualised;
}

void check_variant(const Scenario& scenario, Variant variant) {
    if (yearly_only(variant) && !scenario.horizon.is_yearly()) {
        throw ValidationError(std::string(variant_name(variant)) +
                              " requires every year to be a milestone");
    }
}

}  // namespace

double invest_coefficient(const Scenario& scenario, Variant variant, int tech,
                          int milestone) {
    check_variant(scenario, variant);
    const TechnologyParams& t = scenario.technologies.at(tech);
    const Horizon& horizon = scenario.horizon;
    double present = discount_factor(scenario.social_rate, milestone);

    switch (variant) {
        case Variant::Total:
            return present * t.overnight_at(milestone);
        case Variant::TotalSalvage:
        case Variant::TotalSalvageMilestone:
            return present * (t.overnight_at(milestone) -
                              salvage_value(t, milestone, horizon.end()));
        case Variant::Annualised:
        case Variant::AnnualisedMilestone: {
            // Sum the weighted annuities over the milestones the asset is
            // alive at. On a yearly horizon all weights are 1 and this is the
            // truncated annuity factor.
            auto window = capacity_window(milestone, t.lifetime_years, horizon);
            DiscountRate wacc = t.wacc_at(milestone);
            double sum = 0.0;
            for (int j : window.active_milestones) {
                sum += horizon.weight_of(j) * discount_factor(wacc, j - milestone);
            }
            return present * t.annualised_at(milestone) * sum;
        }
    }
    throw ValidationError("unreachable variant");
}

double operational_coefficient(const Scenario& scenario, int tech, int milestone,
                               int period, int timestep) {
    (void)timestep;  // timesteps are opaque; cost does not vary inside a period
    return discount_factor(scenario.social_rate, milestone) *
           scenario.horizon.weight_of(milestone) *
           scenario.var_cost(static_cast<size_t>(tech), milestone) *
           scenario.op_weight(milestone, period);
}

LinearProgram build_lp(const Scenario& scenario, Variant variant) {
    check_variant(scenario, variant);
    const Horizon& horizon = scenario.horizon;
    const int ntech = static_cast<int>(scenario.technologies.size());

    LinearProgram lp;

    // Invest columns, tech-major.
    for (int a = 0; a < ntech; ++a) {
        for (int m : horizon.milestones()) {
            lp.directory.push_back({VarKey::Kind::Invest, a, m, 0, 0});
            lp.objective.push_back(invest_coefficient(scenario, variant, a, m));
            const auto& t = scenario.technologies[a];
            lp.upper.push_back(t.max_invest ? *t.max_invest : LinearProgram::unbounded);
        }
    }

    // Production columns, one per technology and demand key.
    for (const auto& [key, value] : scenario.demand) {
        (void)value;
        for (int a = 0; a < ntech; ++a) {
            lp.directory.push_back({VarKey::Kind::Production, a, key.milestone,
                                    key.period, key.timestep});
            lp.objective.push_back(operational_coefficient(scenario, a, key.milestone,
                                                           key.period, key.timestep));
            lp.upper.push_back(LinearProgram::unbounded);
        }
    }

    const int ncols = lp.column_count();
    auto column_of = [&](const VarKey& key) {
        for (int c = 0; c < ncols; ++c) {
            if (lp.directory[c] == key) return c;
        }
        throw ValidationError("internal: variable not in directory");
    };

    // Which investments are alive at each milestone, per technology.
    std::vector<std::vector<std::vector<int>>> alive(ntech);
    for (int a = 0; a < ntech; ++a) {
        alive[a].resize(horizon.milestones().size());
        const auto& t = scenario.technologies[a];
        for (int j : horizon.milestones()) {
            auto window = capacity_window(j, t.lifetime_years, horizon);
            for (int m : window.active_milestones) {
                alive[a][horizon.milestone_index(m)].push_back(j);
            }
        }
    }

    // Production limit: p_{a,m,k,t} - sum of alive x_{a,j} <= 0.
    for (const auto& [key, value] : scenario.demand) {
        (void)value;
        for (int a = 0; a < ntech; ++a) {
            LinearProgram::Row row;
            row.coeffs.assign(ncols, 0.0);
            row.sense = '<';
            row.rhs = 0.0;
            row.coeffs[column_of({VarKey::Kind::Production, a, key.milestone, key.period,
                                  key.timestep})] = 1.0;
            for (int j : alive[a][horizon.milestone_index(key.milestone)]) {
                row.coeffs[column_of({VarKey::Kind::Invest, a, j, 0, 0})] -= 1.0;
            }
            lp.rows.push_back(std::move(row));
        }
    }

    // Demand: sum_a p_{a,m,k,t} >= demand(m,k,t).
    for (const auto& [key, value] : scenario.demand) {
        LinearProgram::Row row;
        row.coeffs.assign(ncols, 0.0);
        row.sense = '>';
        row.rhs = value;
        for (int a = 0; a < ntech; ++a) {
            row.coeffs[column_of({VarKey::Kind::Production, a, key.milestone, key.period,
                                  key.timestep})] = 1.0;
        }
        lp.rows.push_back(std::move(row));
    }

    return lp;
}

simplex::StandardFormLP to_standard_form(const LinearProgram& lp) {
    simplex::StandardFormLP out;
    out.objective = lp.objective;
    out.upper = lp.upper;
    out.rows.reserve(lp.rows.size());
    for (const auto& row : lp.rows) {
        out.rows.push_back({row.coeffs, row.sense, row.rhs});
    }
    return out;
}

double objective_value(const Scenario& scenario, Variant variant,
                       const LinearProgram& lp, const std::vector<double>& levels) {
    check_variant(scenario, variant);
    if (levels.size() != lp.objective.size()) {
        throw ValidationError("objective_value: level vector has wrong dimension");
    }
    double sum = 0.0;
    for (size_t c = 0; c < levels.size(); ++c) sum += lp.objective[c] * levels[c];
    return sum;
}

CostBreakdown cost_breakdown(const Scenario& scenario, Variant variant,
                             const LinearProgram& lp,
                             const std::vector<double>& solution) {
    check_variant(scenario, variant);
    if (solution.size() != lp.objective.size()) {
        throw ValidationError("cost_breakdown: solution has wrong dimension");
    }
    constexpr double feas_tol = 1e-6;
    for (const auto& row : lp.rows) {
        double lhs = 0.0;
        for (size_t c = 0; c < solution.size(); ++c) lhs += row.coeffs[c] * solution[c];
        bool ok = row.sense == '<'   ? lhs <= row.rhs + feas_tol
                  : row.sense == '>' ? lhs >= row.rhs - feas_tol
                                     : std::abs(lhs - row.rhs) <= feas_tol;
        if (!ok) throw ValidationError("cost_breakdown: solution violates a constraint");
    }
    for (size_t c = 0; c < solution.size(); ++c) {
        if (solution[c] < -feas_tol || solution[c] > lp.upper[c] + feas_tol) {
            throw ValidationError("cost_breakdown: solution violates a bound");
        }
    }

    CostBreakdown bd;
    std::map<int, double> op_by_milestone;
    for (size_t c = 0; c < solution.size(); ++c) {
        const VarKey& key = lp.directory[c];
        double cost = lp.objective[c] * solution[c];
        if (key.kind == VarKey::Kind::Invest) {
            bd.investment.push_back({key.tech, key.milestone, solution[c], cost});
            bd.investment_total += cost;
        } else {
            op_by_milestone[key.milestone] += cost;
            bd.operational_total += cost;
        }
    }
    for (const auto& [m, cost] : op_by_milestone) bd.operational.push_back({m, cost});
    return bd;
}

}  // namespace capex
