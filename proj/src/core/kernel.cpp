// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#include "kernel.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace hflm {

void ProcessParams::validate() const
{
    require_domain(alpha > 0.0 && alpha < 2.0, "process alpha must lie in (0,2)");
    require_domain(hurst > 0.0 && hurst < 1.0, "hurst must lie in (0,1)");
    require_domain(a != 0.0 || b != 0.0, "(a, b) must not both vanish");
}

void FddSpec::validate() const
{
    require(!times.empty(), "probe must contain at least one time");
    require(theta1.size() == times.size() && theta2.size() == times.size(),
            "probe times and frequencies differ in length");
    for (std::size_t j = 0; j < times.size(); ++j)
        require(std::isfinite(times[j]) && std::isfinite(theta1[j]) && std::isfinite(theta2[j]),
                "probe entries must be finite");
}

bool FddSpec::degenerate() const
{
    bool any = false;
    for (std::size_t j = 0; j < times.size(); ++j)
        any = any || (times[j] != 0.0 && (theta1[j] != 0.0 || theta2[j] != 0.0));
    return !any;
}

double FddSpec::max_abs_time() const
{
    double m = 0.0;
    for (double t : times)
        m = std::max(m, std::abs(t));
    return m;
}

double FddSpec::min_abs_nonzero_time() const
{
    double m = 0.0;
    for (double t : times)
        if (t != 0.0)
            m = (m == 0.0) ? std::abs(t) : std::min(m, std::abs(t));
    return m;
}

double spectral_weight(ProcessParams const& params, double s)
{
    require_domain(s != 0.0, "kernel is not defined at s = 0");
    require_domain(std::abs(s) >= 1e-300, "|s| below 1e-300 overflows the spectral weight");
    double const p = params.weight_exponent();
    if (s > 0.0)
        return params.a == 0.0 ? 0.0 : params.a * std::pow(s, p);
    return params.b == 0.0 ? 0.0 : params.b * std::pow(-s, p);
}

std::complex<double> phase_factor(double t, double s)
{
    double const x = t * s;
    if (std::abs(x) < 1e-4)
    {
        double const x2 = x * x;
        return {t * (1.0 - x2 / 6.0 + x2 * x2 / 120.0), 0.5 * t * x * (1.0 - x2 / 12.0)};
    }
    double const h = std::sin(0.5 * x);
    return {std::sin(x) / s, 2.0 * h * h / s};
}

std::complex<double> kernel(ProcessParams const& params, double t, double s)
{
    double const w = spectral_weight(params, s);
    if (w == 0.0 || t == 0.0)
        return {0.0, 0.0};
    return phase_factor(t, s) * w;
}

Vec2 g_vector(ProcessParams const& params, FddSpec const& fdd, double u)
{
    double const w = spectral_weight(params, u);
    double g1 = 0.0, g2 = 0.0;
    if (w == 0.0)
        return {0.0, 0.0};
    for (std::size_t j = 0; j < fdd.size(); ++j)
    {
        if (fdd.times[j] == 0.0)
            continue;
        auto const f = phase_factor(fdd.times[j], u) * w;
        g1 += fdd.theta1[j] * f.real() + fdd.theta2[j] * f.imag();
        g2 += fdd.theta2[j] * f.real() - fdd.theta1[j] * f.imag();
    }
    return {g1, g2};
}

double g_norm(ProcessParams const& params, FddSpec const& fdd, double u)
{
    auto const g = g_vector(params, fdd, u);
    return std::hypot(g[0], g[1]);
}

}  // namespace hflm
