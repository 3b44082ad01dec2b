// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#include "chf_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "error.hpp"

namespace hflm {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNearX = 1e-3;

// J0(x) - 1 without cancellation for small x.
double j0_minus_one(double x)
{
    if (x < 0.5)
    {
        double const y = 0.25 * x * x;
        // -sum_{k>=1} (-y)^k / (k!)^2
        double term = -y;
        double acc = term;
        for (int k = 2; k <= 7; ++k)
        {
            term *= -y / (static_cast<double>(k) * k);
            acc += term;
        }
        return acc;
    }
    return ::j0(x) - 1.0;
}

double lagrange4(double const* xs, double const* ys, double x)
{
    double acc = 0.0;
    for (int i = 0; i < 4; ++i)
    {
        double w = 1.0;
        for (int j = 0; j < 4; ++j)
            if (j != i)
                w *= (x - xs[j]) / (xs[i] - xs[j]);
        acc += w * ys[i];
    }
    return acc;
}

}  // namespace

LevyExponent::LevyExponent(LevyModel model, QuadSpec qs) : model_(std::move(model)), qs_(qs)
{
    qs_.validate();
    double const lo = std::log(qs_.cache_rho_min);
    double const hi = std::log(qs_.cache_rho_max);
    double const step = std::log(10.0) / qs_.cache_per_decade;
    auto const n = static_cast<std::size_t>(std::ceil((hi - lo) / step)) + 1;
    log_rho_.resize(n);
    log_val_.resize(n);
    for (std::size_t k = 0; k < n; ++k)
    {
        log_rho_[k] = lo + step * static_cast<double>(k);
        double const v = direct(std::exp(log_rho_[k]));
        if (!(v < 0.0))
            throw NonConvergenceError("psi is not negative at rho = "
                                      + std::to_string(std::exp(log_rho_[k])));
        log_val_[k] = std::log(-v);
    }
    auto law_from = [&](std::size_t i, std::size_t j) {
        double const q = (log_val_[j] - log_val_[i]) / (log_rho_[j] - log_rho_[i]);
        return SmallRhoLaw{-std::exp(log_val_[i] - q * log_rho_[i]), q};
    };
    small_ = law_from(0, 1);
    large_ = law_from(n - 2, n - 1);
    if (model_.finite_mass())
        mass_ = model_.total_mass();
}

double LevyExponent::operator()(double rho) const
{
    rho = std::abs(rho);
    if (rho == 0.0)
        return 0.0;
    double const lr = std::log(rho);
    if (lr <= log_rho_.front())
        return small_.coef * std::pow(rho, small_.exponent);
    if (lr >= log_rho_.back())
        return std::isfinite(mass_) ? -mass_ : large_.coef * std::pow(rho, large_.exponent);
    double const step = log_rho_[1] - log_rho_[0];
    auto k = static_cast<std::ptrdiff_t>((lr - log_rho_[0]) / step);
    auto const last = static_cast<std::ptrdiff_t>(log_rho_.size()) - 4;
    k = std::clamp<std::ptrdiff_t>(k - 1, 0, last);
    return -std::exp(lagrange4(&log_rho_[k], &log_val_[k], lr));
}

double LevyExponent::direct(double rho) const
{
    return psi_radial(model_, rho, qs_);
}

double psi_radial(LevyModel const& model, double rho, QuadSpec const& qs)
{
    rho = std::abs(rho);
    require(std::isfinite(rho), "psi: non-finite argument");
    if (rho == 0.0)
        return 0.0;

    // (J0 - 1) ~ -x^2/4 on [0, kNearX / rho].
    double const near = -0.25 * rho * rho * model.inner_moment2(kNearX / rho);

    double const x_max = qs.r_max;
    std::vector<double> breaks = quad::geometric_breaks(kNearX, 1.0, qs.panels_per_decade);
    auto const osc = quad::uniform_breaks(1.0, x_max, kPi);
    breaks.insert(breaks.end(), osc.begin() + 1, osc.end());
    for (double r : model.features())
        if (rho * r > kNearX && rho * r < x_max)
            breaks.push_back(rho * r);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    auto integrand = [&](double x) { return j0_minus_one(x) * model.radial_density(x / rho) * x; };
    double const mid = quad::panels(integrand, breaks).value / (rho * rho);

    // Beyond R: -tail mass plus the leading integration-by-parts boundary terms.
    double const R = x_max / rho;
    double tail = -model.tail_mass(R) - R * model.radial_density(R) * ::j1(rho * R) / rho;
    for (auto const& jump : model.jumps())
        if (jump.r > R)
            tail -= jump.r * jump.delta * ::j1(rho * jump.r) / rho;

    return 2.0 * kPi * (near + mid + tail);
}

double psi(LevyModel const& model, Vec2 z, QuadSpec const& qs)
{
    qs.validate();
    return psi_radial(model, std::hypot(z[0], z[1]), qs);
}

quad::Estimate psi_bruteforce(LevyModel const& model, Vec2 z, BruteForceLattice lattice)
{
    require(lattice.cells_per_half_width >= 8 && lattice.cells_per_half_width % 4 == 0,
            "psi_bruteforce: cells_per_half_width must be a multiple of 4, >= 8");
    double const rho = std::hypot(z[0], z[1]);
    if (rho == 0.0)
        return {};
    double const outer = lattice.outer_scale / rho;
    int const levels =
        static_cast<int>(std::ceil(std::log2(lattice.outer_scale / lattice.hole_scale)));
    double const hole = outer * std::ldexp(1.0, -levels);

    auto sweep = [&](int base) {
        // Quadratic term on the hole, using the disk of equal area.
        double const r_eq = hole * 2.0 / std::sqrt(kPi);
        double acc = -0.25 * rho * rho * 2.0 * kPi * model.inner_moment2(r_eq);
        for (int l = 1; l <= levels; ++l)
        {
            double const w = outer * std::ldexp(1.0, l - levels);
            int const n = std::max(base, 2 * static_cast<int>(std::ceil(rho * w * base / 32.0)));
            double const h = w / n;
            double const inner = 0.5 * w;
            double level_sum = 0.0;
            for (int i = 0; i < 2 * n; ++i)
            {
                double const x = -w + (i + 0.5) * h;
                for (int j = 0; j < 2 * n; ++j)
                {
                    double const y = -w + (j + 0.5) * h;
                    if (std::max(std::abs(x), std::abs(y)) < inner)
                        continue;
                    double const r = std::hypot(x, y);
                    if (l == levels && r > outer)
                        continue;
                    level_sum += (std::cos(z[0] * x + z[1] * y) - 1.0) * model.radial_density(r);
                }
            }
            acc += level_sum * h * h;
        }
        return acc - 2.0 * kPi * model.tail_mass(outer);
    };

    double const fine = sweep(lattice.cells_per_half_width);
    double const coarse = sweep(lattice.cells_per_half_width / 2);
    double const tail_bound = 2.0 * kPi * model.radial_density(outer) * outer
                              * std::sqrt(2.0 / (kPi * rho * outer)) / rho;
    return {(4.0 * fine - coarse) / 3.0, std::abs(fine - coarse) / 3.0 + tail_bound};
}

ChfEngine::ChfEngine(LevyModel model, QuadSpec qs) : exponent_(std::move(model), qs) {}

quad::Estimate ChfEngine::log_chf_fdd(ProcessParams const& params, FddSpec const& fdd, double eps,
                                      ChfOptions const& opts) const
{
    params.validate();
    fdd.validate();
    require_domain(eps > 0.0 && std::isfinite(eps), "eps must be positive");
    if (fdd.degenerate())
        return {};
    double const index = std::isnan(opts.rescale_index) ? params.hurst : opts.rescale_index;
    auto const& psi_of = exponent_;
    SmallRhoLaw law = psi_of.small_rho_law();
    QuadSpec const& qs = psi_of.quad_spec();

    if (opts.raw_coordinates)
    {
        FddSpec scaled = fdd;
        for (double& t : scaled.times)
            t *= eps;
        auto h = [&](double rho) { return psi_of(rho); };
        return integrate_spectral(params, scaled, std::pow(eps, -index), h, law, qs);
    }
    double const lambda = std::pow(eps, params.scaling_exponent() - index);
    double const inv = 1.0 / eps;
    auto h = [&](double rho) { return psi_of(rho) * inv; };
    law.coef *= inv;
    return integrate_spectral(params, fdd, lambda, h, law, qs);
}

double log_chf_fdd(LevyModel const& model, ProcessParams const& params, FddSpec const& fdd,
                   double eps, QuadSpec const& qs)
{
    return ChfEngine(model, qs).log_chf_fdd(params, fdd, eps).value;
}

}  // namespace hflm
