// SPDX-License-Identifier: Apache-2.0
//
// Brute-force LP oracle for tiny problems: enumerate every basic solution
// (each choice of n active constraints from rows + bounds), keep the feasible
// ones, take the minimum objective. Independent of the simplex path.
#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "simplex.hpp"

namespace capex::test {

struct OracleResult {
    bool feasible = false;
    double objective = 0.0;
};

namespace detail {

// Solves a dense n x n system by Gaussian elimination with partial pivoting.
inline std::optional<std::vector<double>> solve_square(
    std::vector<std::vector<double>> a, std::vector<double> b) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int row = col + 1; row < n; ++row) {
            if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
        }
        if (std::abs(a[pivot][col]) < 1e-10) return std::nullopt;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (int row = 0; row < n; ++row) {
            if (row == col) continue;
            double f = a[row][col] / a[col][col];
            for (int k = col; k < n; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

}  // namespace detail

inline OracleResult enumerate_vertices(const simplex::StandardFormLP& lp,
                                       double feas_tol = 1e-7) {
    const int n = static_cast<int>(lp.objective.size());

    // All constraints as hyperplane candidates: rows, lower bounds x_j >= 0,
    // finite upper bounds.
    struct Plane {
        std::vector<double> a;
        double b;
        char sense;
    };
    std::vector<Plane> planes;
    for (const auto& row : lp.rows) planes.push_back({row.coeffs, row.rhs, row.sense});
    for (int j = 0; j < n; ++j) {
        std::vector<double> a(n, 0.0);
        a[j] = 1.0;
        planes.push_back({a, 0.0, '>'});
        if (j < static_cast<int>(lp.upper.size()) && std::isfinite(lp.upper[j])) {
            planes.push_back({a, lp.upper[j], '<'});
        }
    }

    auto feasible = [&](const std::vector<double>& x) {
        for (const auto& p : planes) {
            double lhs = 0.0;
            for (int j = 0; j < n; ++j) lhs += p.a[j] * x[j];
            if (p.sense == '<' && lhs > p.b + feas_tol) return false;
            if (p.sense == '>' && lhs < p.b - feas_tol) return false;
            if (p.sense == '=' && std::abs(lhs - p.b) > feas_tol) return false;
        }
        return true;
    };

    OracleResult best;
    const int total = static_cast<int>(planes.size());
    std::vector<int> choice(n, 0);

    // Iterate all n-subsets of planes.
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    bool done = n > total;
    while (!done) {
        std::vector<std::vector<double>> a;
        std::vector<double> b;
        for (int i : idx) {
            a.push_back(planes[i].a);
            b.push_back(planes[i].b);
        }
        if (auto x = detail::solve_square(std::move(a), std::move(b))) {
            if (feasible(*x)) {
                double obj = 0.0;
                for (int j = 0; j < n; ++j) obj += lp.objective[j] * (*x)[j];
                if (!best.feasible || obj < best.objective) {
                    best.feasible = true;
                    best.objective = obj;
                }
            }
        }
        // next combination
        int i = n - 1;
        while (i >= 0 && idx[i] == total - n + i) --i;
        if (i < 0) {
            done = true;
        } else {
            ++idx[i];
            for (int k = i + 1; k < n; ++k) idx[k] = idx[k - 1] + 1;
        }
    }
    return best;
}

}  // namespace capex::test
