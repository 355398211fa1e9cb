// SPDX-License-Identifier: Apache-2.0
//
// capex -- command line front end for the capexplan shared library. Talks to
// the core exclusively through the extern-C API in capexplan/capexplan.h.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "capexplan/capexplan.h"

namespace {

// Exit codes, one per documented failure class.
enum ExitCode {
    kOk = 0,
    kUsage = 1,
    kInfeasible = 2,
    kUnbounded = 3,
    kValidation = 4,
    kSolverFailure = 5,
};

struct Options {
    std::string format = "json";
    std::string out_path;
    double tolerance = 1e-9;
};

[[noreturn]] void fail(ExitCode code, const std::string& kind, const std::string& message) {
    std::cerr << "error: " << kind << ": " << message << "\n";
    std::exit(code);
}

void check(cx_status status) {
    if (status == CX_OK) return;
    fail(status == CX_ERR_VALIDATION ? kValidation : kUsage,
         status == CX_ERR_VALIDATION ? "validation" : "argument", cx_last_error());
}

cx_format parse_format(const std::string& format) {
    if (format == "json") return CX_FORMAT_JSON;
    if (format == "csv") return CX_FORMAT_CSV;
    fail(kUsage, "argument", "unknown format '" + format + "' (expected json or csv)");
}

// write-temp-then-rename so a crashed run never leaves a half-written report
void write_atomic(const std::string& path, const std::string& text) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(kUsage, "io", "cannot write " + tmp);
        out << text;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        fail(kUsage, "io", "cannot rename " + tmp + " to " + path);
    }
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        write_atomic(opt.out_path, text);
    }
}

void emit_scalar(const Options& opt, const std::string& name, double value) {
    char full[64];
    std::snprintf(full, sizeof(full), "%.17g", value);
    if (opt.format == "csv") {
        emit(opt, "path,value\n" + name + "," + full + "\n");
    } else {
        emit(opt, std::string("{\n  \"") + name + "\": " + full + "\n}\n");
    }
    if (!opt.out_path.empty()) return;
}

double parse_rate_arg(const std::string& text) {
    double rate = 0.0;
    check(cx_rate_parse(text.c_str(), &rate));
    return rate;
}

cx_variant parse_variant_arg(const std::string& name) {
    cx_variant v;
    check(cx_variant_parse(name.c_str(), &v));
    return v;
}

cx_scenario* load_scenario(const std::string& path) {
    cx_scenario* scenario = nullptr;
    check(cx_scenario_load_file(path.c_str(), &scenario));
    for (int i = 0; i < cx_scenario_warning_count(scenario); ++i) {
        std::cerr << "warning: " << cx_scenario_warning(scenario, i) << "\n";
    }
    return scenario;
}

ExitCode exit_code_for(cx_solve_status status) {
    switch (status) {
        case CX_SOLVE_OPTIMAL: return kOk;
        case CX_SOLVE_INFEASIBLE: return kInfeasible;
        case CX_SOLVE_UNBOUNDED: return kUnbounded;
        case CX_SOLVE_FAILURE: return kSolverFailure;
    }
    return kSolverFailure;
}

const char* solve_status_name(cx_solve_status status) {
    switch (status) {
        case CX_SOLVE_OPTIMAL: return "OPTIMAL";
        case CX_SOLVE_INFEASIBLE: return "INFEASIBLE";
        case CX_SOLVE_UNBOUNDED: return "UNBOUNDED";
        case CX_SOLVE_FAILURE: return "FAILURE";
    }
    return "?";
}

int emit_result(const Options& opt, cx_result* result, bool print_summary) {
    char* text = nullptr;
    check(cx_result_render(result, parse_format(opt.format), &text));
    emit(opt, text);
    cx_string_free(text);

    cx_solve_status status = cx_result_solve_status(result);
    if (print_summary && !opt.out_path.empty()) {
        std::printf("status: %s\n", solve_status_name(status));
        if (status == CX_SOLVE_OPTIMAL) {
            std::printf("objective: %.2f\n", cx_result_objective(result));
        }
    }
    ExitCode code = exit_code_for(status);
    cx_result_free(result);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"capexplan: multi-year investment planning with cross-validated "
                 "discounting formulations"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", opt.out_path, "Write the report to this file");
    app.add_option("--tolerance", opt.tolerance,
                   "Relative threshold for equivalence verdicts");

    std::string cost_arg, rate_arg, variant_arg, variant_b_arg, scenario_arg;
    std::string milestones_arg;
    int lifetime = 1, invest_year = 0, last_year = 0, horizon_end = 0;

    auto* annuity = app.add_subcommand("annuity", "Annualise a total (overnight) cost");
    annuity->add_option("total_cost", cost_arg)->required();
    annuity->add_option("wacc", rate_arg)->required();
    annuity->add_option("lifetime", lifetime)->required();

    auto* totalise = app.add_subcommand("totalise", "Total cost of a constant annuity");
    totalise->add_option("annualised_cost", cost_arg)->required();
    totalise->add_option("wacc", rate_arg)->required();
    totalise->add_option("lifetime", lifetime)->required();

    auto* salvage = app.add_subcommand("salvage", "Salvage value beyond the horizon");
    salvage->add_option("total_cost", cost_arg)->required();
    salvage->add_option("wacc", rate_arg)->required();
    salvage->add_option("lifetime", lifetime)->required();
    salvage->add_option("invest_year", invest_year)->required();
    salvage->add_option("last_year", last_year)->required();

    auto* weights = app.add_subcommand("weights", "Derive milestone-year weights");
    weights->add_option("milestones", milestones_arg, "Comma-separated, e.g. 0,2,5")
        ->required();
    weights->add_option("horizon_end", horizon_end)->required();

    auto* solve = app.add_subcommand("solve", "Build and solve the planning LP");
    solve->add_option("scenario", scenario_arg)->required()->check(CLI::ExistingFile);
    solve->add_option("--variant", variant_arg, "Objective variant")->required();

    auto* compare = app.add_subcommand("compare", "Certify equivalence of two variants");
    compare->add_option("scenario", scenario_arg)->required()->check(CLI::ExistingFile);
    compare->add_option("variant_a", variant_arg)->required();
    compare->add_option("variant_b", variant_b_arg)->required();

    auto* bias = app.add_subcommand("bias", "Quantify milestone-weighting bias");
    bias->add_option("scenario", scenario_arg)->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (annuity->parsed() || totalise->parsed() || salvage->parsed()) {
            char* end = nullptr;
            double cost = std::strtod(cost_arg.c_str(), &end);
            if (end == cost_arg.c_str() || *end != '\0') {
                fail(kUsage, "argument", "malformed cost '" + cost_arg + "'");
            }
            double rate = parse_rate_arg(rate_arg);
            double value = 0.0;
            const char* name = nullptr;
            if (annuity->parsed()) {
                check(cx_annualise(cost, rate, lifetime, &value));
                name = "annualised_cost";
            } else if (totalise->parsed()) {
                check(cx_totalise(cost, rate, lifetime, &value));
                name = "total_cost";
            } else {
                check(cx_salvage_value(cost, rate, lifetime, invest_year, last_year, &value));
                name = "salvage_value";
            }
            if (opt.out_path.empty() && opt.format == "json" &&
                !app.count("--format")) {
                std::printf("%.2f\n", value);  // display form; machine formats keep full precision
            } else {
                emit_scalar(opt, name, value);
            }
            return kOk;
        }

        if (weights->parsed()) {
            std::vector<int> milestones;
            std::string token;
            for (char c : milestones_arg + ",") {
                if (c == ',') {
                    if (!token.empty()) milestones.push_back(std::stoi(token));
                    token.clear();
                } else {
                    token += c;
                }
            }
            std::vector<int> result(milestones.size());
            check(cx_milestone_weights(milestones.data(),
                                       static_cast<int>(milestones.size()), horizon_end,
                                       result.data()));
            std::string text;
            for (size_t i = 0; i < result.size(); ++i) {
                text += (i ? "," : "") + std::to_string(result[i]);
            }
            if (opt.format == "csv") {
                std::string csv = "milestone,weight\n";
                for (size_t i = 0; i < result.size(); ++i) {
                    csv += std::to_string(milestones[i]) + "," +
                           std::to_string(result[i]) + "\n";
                }
                emit(opt, csv);
            } else {
                emit(opt, "{\n  \"weights\": [" + text + "]\n}\n");
            }
            return kOk;
        }

        cx_scenario* scenario = load_scenario(scenario_arg);
        cx_result* result = nullptr;
        bool summary = false;
        if (solve->parsed()) {
            check(cx_solve(scenario, parse_variant_arg(variant_arg), &result));
            summary = true;
        } else if (compare->parsed()) {
            check(cx_compare(scenario, parse_variant_arg(variant_arg),
                             parse_variant_arg(variant_b_arg), opt.tolerance, &result));
        } else {
            check(cx_bias(scenario, &result));
        }
        int code = emit_result(opt, result, summary);
        cx_scenario_free(scenario);
        return code;
    } catch (const std::exception& e) {
        fail(kUsage, "internal", e.what());
    }
}
