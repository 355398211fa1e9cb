// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Tolerances are pinned in code next to each check.
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "model.hpp"
#include "support/random_lp.hpp"
#include "support/random_scenario.hpp"
#include "support/vertex_oracle.hpp"

using namespace capex;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s  criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", number,
                name.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++g_failures;
}

double rel_dev(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

TechnologyParams tech(double total, double wacc, int lifetime) {
    TechnologyParams t;
    t.name = "t";
    t.overnight_cost = total;
    t.wacc = DiscountRate(wacc);
    t.lifetime_years = lifetime;
    t.finalize();
    return t;
}

// 1. Annuity reproduction: 20.80 and 14.74, both +-0.005.
void criterion1() {
    double a = annualise(100.0, DiscountRate(0.02), 5);
    double b = annualise(100.0, DiscountRate(0.05), 8);
    bool pass = std::abs(a - 20.80) <= 0.005 && std::abs(b - 14.74) <= 0.005;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "annualise = %.4f and %.4f", a, b);
    report(1, "annuity reproduction", pass, detail);
}

// 2. Salvage reproduction: 33.01 +- 0.005.
void criterion2() {
    double sv = salvage_value(tech(100.0, 0.05, 8), 0, 4);
    char detail[64];
    std::snprintf(detail, sizeof(detail), "salvage = %.4f", sv);
    report(2, "salvage reproduction", std::abs(sv - 33.01) <= 0.005, detail);
}

// 3. Milestone weights {0,2,5} over [0,5] -> [2,3,1] exactly.
void criterion3() {
    auto w = derive_milestone_weights({0, 2, 5}, 5);
    report(3, "milestone weights", w == std::vector<int>{2, 3, 1},
           "derived [" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," +
               std::to_string(w[2]) + "]");
}

// 4. Coefficient reproduction for the milestone worked example, three WACC
//    samples, term-by-term oracle, 1e-12 relative.
void criterion4() {
    bool pass = true;
    double worst = 0.0;
    for (double w : {0.0, 0.02, 0.05}) {
        Scenario s;
        s.horizon = Horizon::make(5, {0, 2, 5});
        s.social_rate = DiscountRate(0.0);
        s.technologies.push_back(tech(100.0, w, 6));
        s.variable_cost.push_back(0.0);
        s.variable_cost_overrides.emplace_back();
        s.validate();

        double ca = s.technologies[0].annualised_cost;
        double oracle = ca * (2.0 + 3.0 / std::pow(1.0 + w, 2) + 1.0 / std::pow(1.0 + w, 5));
        double coeff = invest_coefficient(s, Variant::AnnualisedMilestone, 0, 0);
        worst = std::max(worst, rel_dev(coeff, oracle));
        pass = pass && rel_dev(coeff, oracle) <= 1e-12;
    }
    char detail[64];
    std::snprintf(detail, sizeof(detail), "max rel dev %.2e", worst);
    report(4, "milestone coefficient reproduction", pass, detail);
}

// 5. TOTAL vs ANNUALISED coefficient vectors on >=200 yearly scenarios whose
//    horizon covers every lifetime, 1e-9 relative.
void criterion5() {
    std::mt19937 rng(501);
    bool pass = true;
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        test::ScenarioOptions opt;
        opt.yearly = true;
        opt.cover_lifetimes = true;
        auto s = test::random_scenario(rng, opt);
        auto total = build_lp(s, Variant::Total);
        auto annualised = build_lp(s, Variant::Annualised);
        for (int c = 0; c < total.column_count(); ++c) {
            double dev = rel_dev(total.objective[c], annualised.objective[c]);
            worst = std::max(worst, dev);
            pass = pass && dev <= 1e-9;
        }
    }
    char detail[64];
    std::snprintf(detail, sizeof(detail), "max rel dev %.2e over 200 scenarios", worst);
    report(5, "full-horizon equivalence (total vs annualised)", pass, detail);
}

// 6. TOTAL_SALVAGE vs ANNUALISED on >=200 yearly scenarios (any lifetime),
//    1e-9 relative, plus the truncated worked fixture C^T - SV = 66.99.
void criterion6() {
    std::mt19937 rng(601);
    bool pass = true;
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        test::ScenarioOptions opt;
        opt.yearly = true;
        auto s = test::random_scenario(rng, opt);
        auto salvaged = build_lp(s, Variant::TotalSalvage);
        auto annualised = build_lp(s, Variant::Annualised);
        for (int c = 0; c < salvaged.column_count(); ++c) {
            double dev = rel_dev(salvaged.objective[c], annualised.objective[c]);
            worst = std::max(worst, dev);
            pass = pass && dev <= 1e-9;
        }
    }
    double fixture = 100.0 - salvage_value(tech(100.0, 0.05, 8), 0, 4);
    pass = pass && std::abs(fixture - 66.99) <= 0.01;
    char detail[96];
    std::snprintf(detail, sizeof(detail), "max rel dev %.2e; C^T - SV = %.4f", worst,
                  fixture);
    report(6, "truncated equivalence (total-salvage vs annualised)", pass, detail);
}

// 7. Milestone variants reproduce yearly objectives (<=1e-12 relative) on
//    >=100 all-milestone scenarios.
void criterion7() {
    std::mt19937 rng(701);
    bool pass = true;
    double worst = 0.0;
    int optimal = 0;
    for (int trial = 0; trial < 100; ++trial) {
        test::ScenarioOptions opt;
        opt.yearly = true;
        auto s = test::random_scenario(rng, opt);
        for (auto [milestone, yearly] :
             {std::pair{Variant::AnnualisedMilestone, Variant::Annualised},
              std::pair{Variant::TotalSalvageMilestone, Variant::TotalSalvage}}) {
            auto a = simplex::solve(to_standard_form(build_lp(s, milestone)));
            auto b = simplex::solve(to_standard_form(build_lp(s, yearly)));
            if (a.status != b.status) {
                pass = false;
                continue;
            }
            if (a.status != simplex::SolveStatus::Optimal) continue;
            ++optimal;
            double dev = a.objective == b.objective ? 0.0 : rel_dev(a.objective, b.objective);
            worst = std::max(worst, dev);
            pass = pass && dev <= 1e-12;
        }
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "max rel dev %.2e (%d optimal pairs)", worst,
                  optimal);
    report(7, "degeneration to yearly variants", pass && optimal >= 100, detail);
}

// 8. Simplex vs vertex enumeration on >=500 random LPs (<=8 vars), 1e-7
//    relative; deterministic across 3 repeated runs.
void criterion8() {
    std::mt19937 rng(801);
    bool pass = true;
    double worst = 0.0;
    int feasible = 0;
    for (int trial = 0; trial < 500; ++trial) {
        auto lp = test::random_lp(rng);
        auto solved = simplex::solve(lp);
        auto oracle = test::enumerate_vertices(lp);
        if (oracle.feasible) {
            ++feasible;
            if (solved.status != simplex::SolveStatus::Optimal) {
                pass = false;
                continue;
            }
            double dev = std::abs(solved.objective - oracle.objective) /
                         std::max({std::abs(solved.objective), std::abs(oracle.objective),
                                   1.0});
            worst = std::max(worst, dev);
            pass = pass && dev <= 1e-7;
        } else {
            pass = pass && solved.status == simplex::SolveStatus::Infeasible;
        }
        for (int repeat = 0; repeat < 2; ++repeat) {
            auto again = simplex::solve(lp);
            pass = pass && again.status == solved.status &&
                   again.objective == solved.objective && again.values == solved.values;
        }
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "max rel dev %.2e (%d feasible of 500)", worst,
                  feasible);
    report(8, "solver vertex-enumeration oracle + determinism", pass, detail);
}

// 9. Annualised-milestone investment coefficients >= exact yearly
//    counterparts on >=200 sparse scenarios with positive WACC; strict
//    somewhere whenever any weight exceeds 1.
void criterion9() {
    std::mt19937 rng(901);
    bool pass = true;
    int strict_checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        test::ScenarioOptions opt;
        opt.sparse = true;
        opt.positive_wacc = true;
        auto s = test::random_scenario(rng, opt);
        bool weighted = false;
        for (int w : s.horizon.weights()) weighted |= w > 1;
        bool any_strict = false;
        for (size_t a = 0; a < s.technologies.size(); ++a) {
            for (int m : s.horizon.milestones()) {
                double milestone = invest_coefficient(s, Variant::AnnualisedMilestone,
                                                      static_cast<int>(a), m);
                double exact = exact_invest_coefficient(s, static_cast<int>(a), m);
                pass = pass && milestone >= exact - 1e-12 * std::max(1.0, exact);
                if (milestone > exact + 1e-12 * std::max(1.0, exact)) any_strict = true;
            }
        }
        if (weighted) {
            ++strict_checked;
            pass = pass && any_strict;
        }
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "%d of 200 scenarios had weights > 1",
                  strict_checked);
    report(9, "milestone overestimation sign property", pass && strict_checked > 50, detail);
}

// 10. totalise(annualise(.)) identity within 1e-9 relative over randomized
//     (cost, rate in [0, 0.2], lifetime in [1, 60]).
void criterion10() {
    std::mt19937 rng(1001);
    std::uniform_real_distribution<double> cost(0.0, 10000.0);
    std::uniform_real_distribution<double> rate(0.0, 0.2);
    std::uniform_int_distribution<int> lt(1, 60);
    bool pass = true;
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        double c = cost(rng);
        DiscountRate w(rate(rng));
        int lifetime = lt(rng);
        double back = totalise(annualise(c, w, lifetime), w, lifetime);
        double dev = c == 0.0 ? std::abs(back) : rel_dev(back, c);
        worst = std::max(worst, dev);
        pass = pass && dev <= 1e-9;
    }
    char detail[64];
    std::snprintf(detail, sizeof(detail), "max rel dev %.2e over 1000 draws", worst);
    report(10, "totalise/annualise roundtrip", pass, detail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criterion(s) failed\n", g_failures);
    return 1;
}
