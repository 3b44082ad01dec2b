// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "chf_engine.hpp"

namespace hflm {

struct LassReport
{
    std::vector<double> eps;
    std::vector<double> a_eps;
    std::vector<double> a_eps_error;  // quadrature error estimates
    double a_limit = 0.0;
    std::vector<double> abs_err;
    std::vector<double> rel_err;
    double slope = 0.0;     // log-log regression of abs_err on eps (descriptive)
    double spearman = 0.0;  // rank correlation of abs_err with eps
    double target_rel = 0.05;
    bool pass = false;      // rel_err at the smallest eps below target_rel
};

// Convergence of A_eps to the stable-limit log-CF along `eps_schedule`
// (decreasing). The model must satisfy the heavy-tail domination condition and the
// process must exist; both are checked.
LassReport lass_report(ChfEngine const& engine, ProcessParams const& params, FddSpec const& fdd,
                       std::vector<double> const& eps_schedule, double target_rel = 0.05);

// A_eps under a different rescaling index H'. Compared with the correct
// index, log|A'_eps / A_eps| grows like (H - H') alpha log eps.
struct IndexCheck
{
    double index = 0.0;
    std::vector<double> a_eps;
    double slope = 0.0;           // fitted d log|A'/A| / d log eps on the second half
    double expected_slope = 0.0;  // (H - H') alpha
    bool diverges = false;        // slope has the expected sign and >= half its size
};

IndexCheck rescaling_check(ChfEngine const& engine, ProcessParams const& params,
                           FddSpec const& fdd, std::vector<double> const& eps_schedule,
                           LassReport const& reference, double index);

struct GaussianTangentReport
{
    double hurst_gaussian = 0.0;  // H + 1/alpha - 1/2
    std::vector<double> eps;
    // Quadratic form on the real parts of the probe times, fitted from
    // A(e_j), A(e_j + e_k) at each eps (row-major n x n).
    std::vector<std::vector<double>> sigma;
    std::vector<double> gram;       // fBm Gram with index hurst_gaussian
    double scale = 0.0;             // least-squares factor sigma ~ scale * gram (last eps)
    double residual = 0.0;          // max |sigma/scale - gram| / max|gram| (last eps)
    double ratio = 0.0;             // sigma_12 / sigma_11 at the last eps (n >= 2)
    double ratio_expected = 0.0;    // gram_12 / gram_11
    std::vector<double> diag_ratio;  // sigma_11(eps) / sigma_11(last eps)
};

// Light-tail mode with compact-support models: rescaling by eps^(H_G).
GaussianTangentReport gaussian_tangent_report(ChfEngine const& engine, ProcessParams const& params,
                                              std::vector<double> const& times,
                                              std::vector<double> const& eps_schedule);

double spearman(std::vector<double> const& x, std::vector<double> const& y);

// Least-squares slope of y on x.
double ols_slope(std::vector<double> const& x, std::vector<double> const& y);

}  // namespace hflm
