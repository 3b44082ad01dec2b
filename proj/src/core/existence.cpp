// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#include "existence.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "error.hpp"

namespace hflm {
namespace {

// 2 k integral of x^(e-1) over (0,1] (at_zero) or (1,inf); +inf when divergent.
double power_moment(double k, double e, bool at_zero)
{
    if (at_zero)
        return e > 0.0 ? 2.0 * k / e : kInf;
    return e < 0.0 ? 2.0 * k / -e : kInf;
}

struct LogGrid
{
    std::vector<double> x;
    std::vector<double> w;  // trapezoid weight times the log-space Jacobian
};

LogGrid log_grid(double lo2, double hi2, int steps)
{
    LogGrid g;
    auto const n = static_cast<int>(std::lround((hi2 - lo2) * steps));
    double const dv = std::log(2.0) / steps;
    for (int j = 0; j <= n; ++j)
    {
        double const x = std::exp2(lo2 + static_cast<double>(j) / steps);
        double const end = (j == 0 || j == n) ? 0.5 : 1.0;
        g.x.push_back(x);
        g.w.push_back(end * dv * x);
    }
    return g;
}

}  // namespace

void Nu1D::validate() const
{
    require(k > 0.0, "nu1d: k must be positive");
    require(delta < 2.0 && delta >= -1.0, "nu1d: delta must lie in [-1, 2)");
    require(tau > 0.0, "nu1d: tau must be positive");
}

double Nu1D::density(double x) const
{
    double const a = std::abs(x);
    if (a == 0.0)
        return delta > -1.0 ? kInf : k;
    if (a <= 1.0)
        return k * std::pow(a, -1.0 - delta);
    return std::isinf(tau) ? 0.0 : k * std::pow(a, -1.0 - tau);
}

void ExistenceQuery::validate() const
{
    require(beta <= 0.0, "existence: beta must be <= 0");
    require(gamma > 0.0, "existence: gamma must be positive");
    nu.validate();
}

LemmaVerdict lemma_verdict(ExistenceQuery const& q)
{
    q.validate();
    LemmaVerdict v;
    v.gamma_ok = q.gamma > 0.5;
    v.tail_moment = std::isinf(q.nu.tau) ? 0.0 : power_moment(q.nu.k, 1.0 / q.gamma - q.nu.tau, false);
    v.cond_a = v.gamma_ok && std::isfinite(v.tail_moment);
    if (q.beta == 0.0)
    {
        v.small_moment = 0.0;
        v.cond_b = true;
    }
    else
    {
        v.small_moment = power_moment(q.nu.k, 1.0 / -q.beta - q.nu.delta, true);
        v.cond_b = std::isfinite(v.small_moment);
    }
    v.exists = v.cond_a && v.cond_b;
    v.sufficient_only = q.bounds_only;
    return v;
}

Nu1D real_part_power_law(LevyModel const& model)
{
    // A radial density ~ r^e projects to a first-coordinate density ~ |x|^(e+1).
    Nu1D nu;
    nu.k = 1.0;
    auto const origin = model.origin_law();
    double const e0 = origin.exponent;
    nu.delta = (origin.coef != 0.0 && e0 < -1.0) ? -e0 - 2.0 : -1.0;
    auto const tail = model.tail_law();
    nu.tau = tail.coef != 0.0 ? -tail.exponent - 2.0 : kInf;
    return nu;
}

HflmExistence hflm_existence(LevyModel const& model, ProcessParams const& params)
{
    params.validate();
    HflmExistence out;
    double const scale = params.scaling_exponent();
    out.outer_exponent = 1.0 / scale;
    out.cond_a_value = real_part_moment(model, out.outer_exponent, MomentRegion::outer);
    if (scale > 1.0)
    {
        out.inner_exponent = 1.0 / (scale - 1.0);
        out.cond_b_value = real_part_moment(model, out.inner_exponent, MomentRegion::inner);
    }
    else
    {
        out.cond_b_vacuous = true;
    }
    out.exists = std::isfinite(out.cond_a_value) && std::isfinite(out.cond_b_value);

    out.shortcut_query.beta = std::min(0.0, params.weight_exponent());
    out.shortcut_query.gamma = scale;
    out.shortcut_query.nu = real_part_power_law(model);
    out.shortcut_query.bounds_only = params.weight_exponent() > 0.0;
    out.shortcut = lemma_verdict(out.shortcut_query);
    return out;
}

OracleEstimate rr_oracle(ExistenceQuery const& q, OracleCaps const& caps)
{
    q.validate();
    require(caps.steps_per_octave >= 1 && caps.log2_x > 0.0 && caps.log2_s > 0.0
                && caps.log2_s_floor < 0.0,
            "rr_oracle: bad caps");
    auto g2 = [&](double s) {
        double const g = s <= 1.0 ? std::pow(s, q.beta) : std::pow(s, -q.gamma);
        return g * g;
    };
    int const steps = caps.steps_per_octave;
    LogGrid const s_in = log_grid(caps.log2_s_floor, 0.0, steps);
    LogGrid const s_out = log_grid(0.0, caps.log2_s, steps);
    LogGrid const x_in = log_grid(-caps.log2_x, 0.0, steps);
    LogGrid const x_out = log_grid(0.0, caps.log2_x, steps);
    std::vector<double> gi(s_in.x.size()), go(s_out.x.size());
    std::transform(s_in.x.begin(), s_in.x.end(), gi.begin(), g2);
    std::transform(s_out.x.begin(), s_out.x.end(), go.begin(), g2);
    double const s_floor = s_in.x.front();
    double const g_floor = g2(s_floor);

    auto inner = [&](double x, bool small_s) {
        double const x2 = x * x;
        double acc = 0.0;
        if (small_s)
        {
            for (std::size_t i = 0; i < gi.size(); ++i)
                acc += s_in.w[i] * std::min(1.0, x2 * gi[i]);
            acc += s_floor * std::min(1.0, x2 * g_floor);
        }
        else
        {
            for (std::size_t i = 0; i < go.size(); ++i)
                acc += s_out.w[i] * std::min(1.0, x2 * go[i]);
        }
        return 2.0 * acc;  // s and -s
    };
    auto outer = [&](LogGrid const& xs, bool small_s) {
        double acc = 0.0;
        for (std::size_t j = 0; j < xs.x.size(); ++j)
            acc += xs.w[j] * q.nu.density(xs.x[j]) * inner(xs.x[j], small_s);
        return 2.0 * acc;  // x and -x
    };

    OracleEstimate est;
    est.per_region[0] = outer(x_in, true);
    est.per_region[1] = outer(x_out, true);
    est.per_region[2] = outer(x_in, false);
    est.per_region[3] = outer(x_out, false);
    for (double r : est.per_region)
        est.total += r;
    return est;
}

SaturationReport rr_saturation(ExistenceQuery const& q, OracleCaps const& caps, double threshold)
{
    SaturationReport rep;
    for (int m = 0; m < 4; ++m)
    {
        OracleCaps c = caps;
        c.log2_x += m;
        c.log2_s += m;
        c.log2_s_floor -= m;
        rep.estimates[m] = rr_oracle(q, c);
    }
    rep.saturated = true;
    for (int m = 0; m < 3; ++m)
    {
        double const a = rep.estimates[m].total;
        double const b = rep.estimates[m + 1].total;
        rep.rel_changes[m] = std::abs(b - a) / std::abs(a);
        rep.saturated = rep.saturated && rep.rel_changes[m] < threshold;
    }
    return rep;
}

}  // namespace hflm
