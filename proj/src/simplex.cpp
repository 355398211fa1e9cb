// SPDX-License-Identifier: Apache-2.0
#include "simplex.hpp"

#include <cmath>

namespace capex::simplex {

const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "OPTIMAL";
        case SolveStatus::Infeasible: return "INFEASIBLE";
        case SolveStatus::Unbounded: return "UNBOUNDED";
        case SolveStatus::Failure: return "FAILURE";
    }
    return "?";
}

namespace {

constexpr int kMaxIterations = 200000;

struct Tableau {
    // rows x (cols + 1); last column is the rhs.
    std::vector<std::vector<double>> a;
    std::vector<int> basis;  // basic column per row
    int cols = 0;

    double& at(int i, int j) { return a[i][j]; }
    double rhs(int i) const { return a[i][cols]; }

    void pivot(int row, int col) {
        double p = a[row][col];
        for (int j = 0; j <= cols; ++j) a[row][j] /= p;
        for (size_t i = 0; i < a.size(); ++i) {
            if (static_cast<int>(i) == row) continue;
            double f = a[i][col];
            if (f == 0.0) continue;
            for (int j = 0; j <= cols; ++j) a[i][j] -= f * a[row][j];
        }
        basis[row] = col;
    }
};

enum class PhaseOutcome { Optimal, Unbounded, Failure, IterationLimit };

// Runs simplex iterations on the tableau for the given cost vector. Entering
// candidates are scanned in Bland order among columns < allowed_cols.
PhaseOutcome run_phase(Tableau& t, const std::vector<double>& cost, int allowed_cols,
                       const Tolerances& tol, bool phase_one, int& iterations) {
    const int m = static_cast<int>(t.a.size());
    while (true) {
        if (iterations >= kMaxIterations) return PhaseOutcome::IterationLimit;

        int entering = -1;
        bool skipped_candidate = false;
        bool unbounded_candidate = false;
        int leaving = -1;

        for (int j = 0; j < allowed_cols && entering < 0; ++j) {
            // Reduced cost d_j = c_j - c_B . column_j.
            double d = cost[j];
            for (int i = 0; i < m; ++i) {
                double cb = cost[t.basis[i]];
                if (cb != 0.0) d -= cb * t.a[i][j];
            }
            if (d >= -tol.reduced_cost) continue;

            // Ratio test with Bland tie-breaking on the basis index.
            int best_row = -1;
            double best_ratio = 0.0;
            bool any_positive = false;
            for (int i = 0; i < m; ++i) {
                double aij = t.a[i][j];
                if (aij > tol.pivot) {
                    double ratio = t.rhs(i) / aij;
                    if (best_row < 0 || ratio < best_ratio ||
                        (ratio == best_ratio && t.basis[i] < t.basis[best_row])) {
                        best_row = i;
                        best_ratio = ratio;
                    }
                } else if (aij > 0.0) {
                    any_positive = true;  // degenerate pivot, skipped
                }
            }
            if (best_row >= 0) {
                entering = j;
                leaving = best_row;
            } else if (any_positive) {
                skipped_candidate = true;  // only tiny pivots available
            } else if (!phase_one) {
                unbounded_candidate = true;
                break;
            } else {
                skipped_candidate = true;
            }
        }

        if (unbounded_candidate) return PhaseOutcome::Unbounded;
        if (entering < 0) {
            return skipped_candidate ? PhaseOutcome::Failure : PhaseOutcome::Optimal;
        }
        t.pivot(leaving, entering);
        ++iterations;
    }
}

}  // namespace

SolveResult solve(const StandardFormLP& lp) { return solve(lp, Tolerances{}); }

SolveResult solve(const StandardFormLP& lp, const Tolerances& tol) {
    const int n = static_cast<int>(lp.objective.size());

    // Expand finite upper bounds into explicit rows, then normalize rhs >= 0.
    std::vector<StandardFormLP::Row> rows = lp.rows;
    for (int j = 0; j < n; ++j) {
        if (j < static_cast<int>(lp.upper.size()) && std::isfinite(lp.upper[j])) {
            StandardFormLP::Row r;
            r.coeffs.assign(n, 0.0);
            r.coeffs[j] = 1.0;
            r.sense = '<';
            r.rhs = lp.upper[j];
            rows.push_back(std::move(r));
        }
    }
    for (auto& r : rows) {
        if (static_cast<int>(r.coeffs.size()) != n) {
            r.coeffs.resize(n, 0.0);
        }
        if (r.rhs < 0.0) {
            for (double& c : r.coeffs) c = -c;
            r.rhs = -r.rhs;
            r.sense = r.sense == '<' ? '>' : r.sense == '>' ? '<' : '=';
        }
    }

    const int m = static_cast<int>(rows.size());
    int nslack = 0;
    for (const auto& r : rows) {
        if (r.sense != '=') ++nslack;
    }
    int nart = 0;
    for (const auto& r : rows) {
        if (r.sense != '<') ++nart;
    }
    const int cols = n + nslack + nart;

    Tableau t;
    t.cols = cols;
    t.a.assign(m, std::vector<double>(cols + 1, 0.0));
    t.basis.assign(m, -1);

    int slack_at = n;
    int art_at = n + nslack;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t.a[i][j] = rows[i].coeffs[j];
        t.a[i][cols] = rows[i].rhs;
        if (rows[i].sense == '<') {
            t.a[i][slack_at] = 1.0;
            t.basis[i] = slack_at++;
        } else if (rows[i].sense == '>') {
            t.a[i][slack_at++] = -1.0;
            t.a[i][art_at] = 1.0;
            t.basis[i] = art_at++;
        } else {
            t.a[i][art_at] = 1.0;
            t.basis[i] = art_at++;
        }
    }
    // Fix the surplus columns' slots: the '>' rows consumed a slack slot with
    // coefficient -1 already placed above.

    SolveResult result;
    int iterations = 0;

    if (nart > 0) {
        std::vector<double> phase1_cost(cols, 0.0);
        for (int j = n + nslack; j < cols; ++j) phase1_cost[j] = 1.0;
        auto outcome = run_phase(t, phase1_cost, cols, tol, true, iterations);
        if (outcome == PhaseOutcome::Failure || outcome == PhaseOutcome::IterationLimit ||
            outcome == PhaseOutcome::Unbounded) {
            result.status = SolveStatus::Failure;
            result.iterations = iterations;
            return result;
        }
        double artificial_sum = 0.0;
        for (int i = 0; i < m; ++i) {
            if (t.basis[i] >= n + nslack) artificial_sum += t.rhs(i);
        }
        if (artificial_sum > tol.feasibility) {
            result.status = SolveStatus::Infeasible;
            result.iterations = iterations;
            return result;
        }
        // Drive remaining artificials out of the basis; drop redundant rows.
        for (int i = static_cast<int>(t.a.size()) - 1; i >= 0; --i) {
            if (t.basis[i] < n + nslack) continue;
            int pivot_col = -1;
            for (int j = 0; j < n + nslack; ++j) {
                if (std::abs(t.a[i][j]) > tol.pivot) {
                    pivot_col = j;
                    break;
                }
            }
            if (pivot_col >= 0) {
                t.pivot(i, pivot_col);
            } else {
                t.a.erase(t.a.begin() + i);
                t.basis.erase(t.basis.begin() + i);
            }
        }
    }

    std::vector<double> phase2_cost(cols, 0.0);
    for (int j = 0; j < n; ++j) phase2_cost[j] = lp.objective[j];
    auto outcome = run_phase(t, phase2_cost, n + nslack, tol, false, iterations);
    result.iterations = iterations;
    if (outcome == PhaseOutcome::Unbounded) {
        result.status = SolveStatus::Unbounded;
        return result;
    }
    if (outcome != PhaseOutcome::Optimal) {
        result.status = SolveStatus::Failure;
        return result;
    }

    result.values.assign(n, 0.0);
    for (size_t i = 0; i < t.a.size(); ++i) {
        if (t.basis[i] < n) result.values[t.basis[i]] = t.rhs(static_cast<int>(i));
    }
    double obj = 0.0;
    for (int j = 0; j < n; ++j) obj += lp.objective[j] * result.values[j];
    result.objective = obj;
    result.status = SolveStatus::Optimal;
    return result;
}

}  // namespace capex::simplex
