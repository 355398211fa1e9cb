// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <limits>
#include <vector>

namespace capex::simplex {

/// minimize c.v  s.t.  A v {<,=,>} b,  0 <= v <= upper.
struct StandardFormLP {
    struct Row {
        std::vector<double> coeffs;
        char sense = '<';
        double rhs = 0.0;
    };
    std::vector<double> objective;
    std::vector<Row> rows;
    std::vector<double> upper;  // +inf = unbounded above

    static constexpr double unbounded = std::numeric_limits<double>::infinity();
};

enum class SolveStatus { Optimal, Infeasible, Unbounded, Failure };

struct SolveResult {
    SolveStatus status = SolveStatus::Failure;
    std::vector<double> values;
    double objective = 0.0;
    int iterations = 0;
};

const char* status_name(SolveStatus s);

/// Two-phase dense primal simplex with Bland's anti-cycling rule.
/// Deterministic: identical input yields bit-identical output.
SolveResult solve(const StandardFormLP& lp);

/// Default tolerances, surfaced for advanced callers.
struct Tolerances {
    double feasibility = 1e-7;    // absolute constraint violation at OPTIMAL
    double reduced_cost = 1e-9;   // entering-column threshold
    double pivot = 1e-11;         // entries below this are treated as zero
};

SolveResult solve(const StandardFormLP& lp, const Tolerances& tol);

}  // namespace capex::simplex
