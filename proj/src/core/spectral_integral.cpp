// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#include "spectral_integral.hpp"

#include <cmath>
#include <complex>
#include <numeric>

#include "error.hpp"

namespace hflm {
namespace {

constexpr double kPi = std::numbers::pi;

quad::Estimate adaptive_panels(std::function<double(double)> const& f,
                               std::vector<double> const& breaks, double abs_tol, double rel_tol)
{
    quad::Estimate total;
    double const per_panel = abs_tol / std::max<std::size_t>(1, breaks.size());
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k)
        total += quad::adaptive_gk15(f, breaks[k], breaks[k + 1], per_panel, rel_tol, 12);
    return total;
}

}  // namespace

void QuadSpec::validate() const
{
    require(abs_tol > 0.0 && rel_tol > 0.0, "quad: tolerances must be positive");
    require(u_max == 0.0 || u_max >= 1.0, "quad: u_max must be 0 (auto) or >= 1");
    require(r_max >= 1.0, "quad: r_max must be >= 1");
    require(panels_per_decade >= 1, "quad: panels_per_decade must be >= 1");
    require(floor_decades >= 1.0, "quad: floor_decades must be >= 1");
    require(spectral_periods >= 4, "quad: spectral_periods must be >= 4");
    require(cache_per_decade >= 4, "quad: cache_per_decade must be >= 4");
    require(cache_rho_min > 0.0 && cache_rho_max > 10.0 * cache_rho_min,
            "quad: bad psi cache range");
}

double common_period(FddSpec const& fdd)
{
    double const tmin = fdd.min_abs_nonzero_time();
    if (tmin == 0.0)
        return 0.0;
    for (int d = 1; d <= 64; ++d)
    {
        long long g = 0;
        bool ok = true;
        for (double t : fdd.times)
        {
            if (t == 0.0)
                continue;
            double const x = std::abs(t) * d / tmin;
            double const n = std::round(x);
            if (std::abs(x - n) > 1e-9 * std::max(1.0, x))
            {
                ok = false;
                break;
            }
            g = std::gcd(g, static_cast<long long>(n));
        }
        if (ok && g > 0)
            return 2.0 * kPi / (tmin / d * static_cast<double>(g));
    }
    return 0.0;
}

double envelope_mean(FddSpec const& fdd, double sign, double q)
{
    double const tmax = fdd.max_abs_time();
    if (tmax == 0.0)
        return 0.0;
    double period = common_period(fdd);
    if (period == 0.0)
        period = 200.0 * 2.0 * kPi / fdd.min_abs_nonzero_time();
    auto env = [&](double u) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t j = 0; j < fdd.size(); ++j)
        {
            std::complex<double> const w{fdd.theta1[j], -fdd.theta2[j]};
            double const x = sign * fdd.times[j] * u;
            acc += w * std::complex<double>{std::cos(x) - 1.0, std::sin(x)};
        }
        return std::pow(std::abs(acc), q);
    };
    auto const breaks = quad::uniform_breaks(0.0, period, kPi / tmax);
    return adaptive_panels(env, breaks, 1e-13, 1e-12).value / period;
}

quad::Estimate integrate_spectral(ProcessParams const& params, FddSpec const& fdd,
                                  double lambda, std::function<double(double)> const& h,
                                  SmallRhoLaw law, QuadSpec const& qs)
{
    params.validate();
    fdd.validate();
    require(lambda > 0.0, "integrate_spectral: lambda must be positive");
    if (fdd.degenerate())
        return {};

    double const p = params.weight_exponent();
    double const tmax = fdd.max_abs_time();
    double const period = common_period(fdd);
    double const base = period > 0.0 ? period : 2.0 * kPi / fdd.min_abs_nonzero_time();

    double upper = qs.u_max > 0.0 ? qs.u_max : qs.spectral_periods * base;
    double half = 0.5 * upper;
    if (period > 0.0)
    {
        upper = std::max(2.0, std::round(upper / period)) * period;
        half = std::max(1.0, std::floor(0.5 * upper / period)) * period;
    }
    double const near_top = 1.0 / tmax;
    require(half > near_top, "integrate_spectral: u_max too small for the probe times");

    double const tail_exp = 1.0 + law.exponent * (p - 1.0);
    if (tail_exp >= 0.0)
        throw NonConvergenceError("spectral integral diverges at infinity (tail exponent "
                                  + std::to_string(tail_exp) + ")");

    quad::Estimate total;
    for (double sign : {1.0, -1.0})
    {
        double const coef = sign > 0 ? params.a : params.b;
        if (coef == 0.0)
            continue;
        std::function<double(double)> const f = [&](double v) {
            return h(lambda * g_norm(params, fdd, sign * v));
        };

        // Graded mesh toward 0 plus power-law remainder on [0, floor].
        double const floor = near_top * std::pow(10.0, -qs.floor_decades);
        auto const near_breaks = quad::geometric_breaks(floor, near_top, qs.panels_per_decade);
        auto near = adaptive_panels(f, near_breaks, qs.abs_tol, qs.rel_tol);
        double const f1 = f(floor);
        double const f2 = f(2.0 * floor);
        double remainder = 0.0;
        if (f1 != 0.0)
        {
            if (!(f2 / f1 > 0.0))
                throw NonConvergenceError("spectral integrand changes sign near u = 0");
            double const gamma = std::log2(f2 / f1);
            if (gamma <= -1.0)
                throw NonConvergenceError(
                    "spectral integrand is not integrable at u = 0 (local exponent "
                    + std::to_string(gamma) + "); existence conditions are violated");
            remainder = f1 * floor / (gamma + 1.0);
        }

        double const step = kPi / tmax;
        auto const mid_lo = adaptive_panels(f, quad::uniform_breaks(near_top, half, step),
                                            qs.abs_tol, qs.rel_tol);
        auto const mid_hi = adaptive_panels(f, quad::uniform_breaks(half, upper, step),
                                            qs.abs_tol, qs.rel_tol);

        double const env = envelope_mean(fdd, sign, law.exponent);
        double const scale = law.coef * std::pow(lambda * std::abs(coef), law.exponent) * env;
        auto tail = [&](double u0) { return scale * std::pow(u0, tail_exp) / (-tail_exp); };

        double const value = remainder + near.value + mid_lo.value + mid_hi.value + tail(upper);
        double const truncation = std::abs(mid_hi.value + tail(upper) - tail(half));
        total.value += value;
        total.error += near.error + mid_lo.error + mid_hi.error + truncation;
    }
    return total;
}

}  // namespace hflm
