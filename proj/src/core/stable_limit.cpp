// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#include "stable_limit.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "error.hpp"
#include "spectral_integral.hpp"

namespace hflm {
namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

double kappa(double alpha)
{
    require_domain(alpha > 0.0 && alpha < 2.0, "kappa: alpha must lie in (0,2)");
    if (alpha == 1.0)
        return 0.5 * kPi;
    return std::tgamma(2.0 - alpha) * std::cos(0.5 * kPi * alpha) / (alpha * (1.0 - alpha));
}

double c1(double alpha)
{
    require_domain(alpha > 0.0 && alpha <= 2.0, "c1: alpha must lie in (0,2]");
    return 2.0 * std::sqrt(kPi) * std::tgamma(0.5 * (alpha + 1.0)) / std::tgamma(0.5 * alpha + 1.0);
}

double kappa_quadrature(double alpha)
{
    require_domain(alpha > 0.0 && alpha < 2.0, "kappa: alpha must lie in (0,2)");
    // [0, 1]: termwise integration of the cosine series.
    double head = 0.0;
    double fact = 1.0;
    for (int k = 1; k <= 20; ++k)
    {
        fact *= (2.0 * k - 1.0) * (2.0 * k);
        double const term = 1.0 / (fact * (2.0 * k - alpha));
        head += (k % 2 == 1) ? term : -term;
    }
    // [1, inf): 1/alpha minus the oscillatory cosine integral.
    double const s = 1.0 + alpha;
    auto f = [s](double r) { return std::cos(r) * std::pow(r, -s); };
    quad::GaussLegendre const gl(24);
    constexpr int kPeriods = 2000;
    double osc = gl.integrate(f, 1.0, 2.0 * kPi);
    for (int k = 1; k < kPeriods; ++k)
        osc += gl.integrate(f, 2.0 * kPi * k, 2.0 * kPi * (k + 1));
    double const R = 2.0 * kPi * kPeriods;
    // Asymptotic expansion of the remaining cosine integral at R = 2 pi N.
    osc += s * std::pow(R, -s - 1.0) - s * (s + 1.0) * (s + 2.0) * std::pow(R, -s - 3.0)
           + s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * std::pow(R, -s - 5.0);
    return head + 1.0 / alpha - osc;
}

double c1_quadrature(double alpha)
{
    require_domain(alpha > 0.0 && alpha <= 2.0, "c1: alpha must lie in (0,2]");
    auto f = [alpha](double v) { return std::pow(std::sin(v), alpha); };
    double const lo = 1e-14;
    auto const breaks = quad::geometric_breaks(lo, 0.5 * kPi, 8);
    double acc = std::pow(lo, alpha + 1.0) / (alpha + 1.0);
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k)
        acc += quad::adaptive_gk15(f, breaks[k], breaks[k + 1], 1e-16, 1e-14, 20).value;
    return 4.0 * acc;
}

StableLimitConstants const& stable_constants(double alpha)
{
    static std::mutex mu;
    static std::map<double, StableLimitConstants> memo;
    std::lock_guard lock(mu);
    auto it = memo.find(alpha);
    if (it == memo.end())
        it = memo.emplace(alpha, StableLimitConstants{alpha, kappa(alpha), c1(alpha)}).first;
    return it->second;
}

double stable_exponent(double alpha, double c0_tail, double rho)
{
    auto const& k = stable_constants(alpha);
    return -c0_tail * k.kappa * k.c1 * std::pow(rho, alpha);
}

quad::Estimate scale_integral(ProcessParams const& params, FddSpec const& fdd, QuadSpec const& qs)
{
    qs.validate();
    double const alpha = params.alpha;
    auto h = [alpha](double rho) { return std::pow(rho, alpha); };
    return integrate_spectral(params, fdd, 1.0, h, SmallRhoLaw{1.0, alpha}, qs);
}

double log_chf_limit(ProcessParams const& params, FddSpec const& fdd, double c0_tail,
                     QuadSpec const& qs)
{
    require(c0_tail > 0.0, "c0_tail must be positive");
    if (fdd.degenerate())
        return 0.0;
    auto const& k = stable_constants(params.alpha);
    return -c0_tail * k.kappa * k.c1 * scale_integral(params, fdd, qs).value;
}

}  // namespace hflm
