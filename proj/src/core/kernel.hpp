// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

#include "levy_model.hpp"

namespace hflm {

// (alpha, H, a, b) of the harmonizable fractional Levy motion.
struct ProcessParams
{
    double alpha = 1.0;
    double hurst = 0.5;
    double a = 1.0;
    double b = 0.0;

    void validate() const;
    // Exponent of the spectral weight, 1 - H - 1/alpha.
    double weight_exponent() const { return 1.0 - hurst - 1.0 / alpha; }
    // H + 1/alpha: the kernel scaling exponent.
    double scaling_exponent() const { return hurst + 1.0 / alpha; }
};

// Finite-dimensional probe: times t_j with frequencies (theta1_j, theta2_j)
// acting on (Re X_{t_j}, Im X_{t_j}).
struct FddSpec
{
    std::vector<double> times;
    std::vector<double> theta1;
    std::vector<double> theta2;

    std::size_t size() const { return times.size(); }
    void validate() const;
    bool degenerate() const;  // all frequencies zero or all times zero
    double max_abs_time() const;
    double min_abs_nonzero_time() const;

    static FddSpec single(double t, double th1, double th2) { return {{t}, {th1}, {th2}}; }
};

// Spectral weight a s_+^p + b s_-^p; domain error at s = 0.
double spectral_weight(ProcessParams const& params, double s);

// (e^{its} - 1) / (is) with a series branch for |ts| < 1e-4.
std::complex<double> phase_factor(double t, double s);

// f_t(s) = phase_factor(t, s) * spectral_weight(s).
std::complex<double> kernel(ProcessParams const& params, double t, double s);

// g(u) = (sum th1 f1 + th2 f2, sum th2 f1 - th1 f2), with f = f1 + i f2.
Vec2 g_vector(ProcessParams const& params, FddSpec const& fdd, double u);

// |g(u)| without forming the pair.
double g_norm(ProcessParams const& params, FddSpec const& fdd, double u);

}  // namespace hflm
