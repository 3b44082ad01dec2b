// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#include "levy_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "error.hpp"
#include "quadrature.hpp"

namespace hflm {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kOriginCut = 1e-12;
constexpr double kTailCut = 1e8;

// Integral of u^e over [1, y].
double power_integral(double e, double y)
{
    if (std::abs(e + 1.0) < 1e-14)
        return std::log(y);
    return std::expm1((e + 1.0) * std::log(y)) / (e + 1.0);
}

// Integral of exp(log_coef) * r^e over [a, b] (b may be +inf, a may be 0),
// evaluated in log space so tiny coefficients can meet huge powers.
double power_piece(double log_coef, double e, double a, double b)
{
    if (std::isinf(log_coef) && log_coef < 0.0)
        return 0.0;
    if (b <= a)
        return 0.0;
    double const k = e + 1.0;
    auto term = [&](double r) { return std::exp(log_coef + k * std::log(r)); };
    if (std::isinf(b))
        return (k < 0.0) ? term(a) / (-k) : kInf;
    if (a == 0.0)
        return (k > 0.0) ? term(b) / k : kInf;
    if (std::abs(k) < 1e-14)
        return std::exp(log_coef) * std::log(b / a);
    return (term(b) - term(a)) / k;
}

}  // namespace

std::string_view to_string(ModelKind kind)
{
    switch (kind)
    {
        case ModelKind::smoothed_pareto: return "smoothed-pareto";
        case ModelKind::truncated_stable: return "truncated-stable";
        case ModelKind::pure_stable: return "pure-stable";
        case ModelKind::compact_support: return "compact-support";
    }
    return "?";
}

ModelKind model_kind_from_string(std::string_view name)
{
    for (auto k : {ModelKind::smoothed_pareto, ModelKind::truncated_stable,
                   ModelKind::pure_stable, ModelKind::compact_support})
        if (to_string(k) == name)
            return k;
    throw DomainError("unknown model kind '" + std::string(name) + "'");
}

LevyModel::LevyModel(ModelSpec const& spec) : spec_(spec)
{
    if (spec_.kind == ModelKind::compact_support)
    {
        require_domain(spec_.r_inner >= 0.0 && spec_.r_outer > spec_.r_inner,
                       "compact-support: need 0 <= r_inner < r_outer");
        require_domain(spec_.level > 0.0, "compact-support: level must be positive");
        return;
    }
    require_domain(spec_.alpha > 0.0 && spec_.alpha < 2.0, "model alpha must lie in (0,2)");
    require_domain(spec_.c0_tail > 0.0, "c0_tail must be positive");
    if (spec_.c_bound <= 0.0)
        spec_.c_bound = spec_.c0_tail;
    // sup f(x) |x|^(2+alpha) equals c0 for every power-law family here.
    require_domain(spec_.c_bound >= spec_.c0_tail,
                   "C_bound must dominate the density (C_bound >= c0_tail)");
    if (spec_.kind == ModelKind::truncated_stable)
        require_domain(spec_.r0 > 0.0, "truncated-stable: r0 must be positive");
}

double LevyModel::radial_density(double r) const
{
    require_domain(r >= 0.0, "radius must be nonnegative");
    double const e = -2.0 - spec_.alpha;
    switch (spec_.kind)
    {
        case ModelKind::smoothed_pareto:
            return spec_.c0_tail * std::pow(1.0 + r, e);
        case ModelKind::truncated_stable:
            return r >= spec_.r0 ? spec_.c0_tail * std::pow(r, e) : 0.0;
        case ModelKind::pure_stable:
            require_domain(r > 0.0, "pure-stable density is singular at the origin");
            return spec_.c0_tail * std::pow(r, e);
        case ModelKind::compact_support:
            return (r >= spec_.r_inner && r <= spec_.r_outer) ? spec_.level : 0.0;
    }
    return 0.0;
}

double LevyModel::density_at(Vec2 x) const
{
    return radial_density(std::hypot(x[0], x[1]));
}

double LevyModel::total_mass() const
{
    return finite_mass() ? kTwoPi * tail_mass(0.0) : kInf;
}

double LevyModel::tail_mass(double radius) const
{
    require_domain(radius >= 0.0, "radius must be nonnegative");
    double const a = spec_.alpha;
    double const c0 = spec_.c0_tail;
    switch (spec_.kind)
    {
        case ModelKind::smoothed_pareto:
        {
            double const y = 1.0 + radius;
            return c0 * std::pow(y, -a) * (1.0 / a - 1.0 / ((1.0 + a) * y));
        }
        case ModelKind::truncated_stable:
            return c0 * std::pow(std::max(radius, spec_.r0), -a) / a;
        case ModelKind::pure_stable:
            return radius > 0.0 ? c0 * std::pow(radius, -a) / a : kInf;
        case ModelKind::compact_support:
        {
            double const lo = std::clamp(radius, spec_.r_inner, spec_.r_outer);
            return 0.5 * spec_.level * (spec_.r_outer * spec_.r_outer - lo * lo);
        }
    }
    return 0.0;
}

double LevyModel::inner_moment2(double radius) const
{
    require_domain(radius >= 0.0, "radius must be nonnegative");
    double const a = spec_.alpha;
    double const c0 = spec_.c0_tail;
    switch (spec_.kind)
    {
        case ModelKind::smoothed_pareto:
        {
            if (radius < 0.5)
            {
                // r^3 (1+r)^(-2-a) expanded binomially, integrated termwise.
                double coef = 1.0;
                double pw = std::pow(radius, 4);
                double acc = 0.0;
                for (int k = 0; k < 200; ++k)
                {
                    double const term = coef * pw / (k + 4.0);
                    acc += term;
                    if (std::abs(term) < 1e-18 * std::abs(acc))
                        break;
                    coef *= (-2.0 - a - k) / (k + 1.0);
                    pw *= radius;
                }
                return c0 * acc;
            }
            double const y = 1.0 + radius;
            return c0 * (power_integral(1.0 - a, y) - 3.0 * power_integral(-a, y)
                         + 3.0 * power_integral(-1.0 - a, y) - power_integral(-2.0 - a, y));
        }
        case ModelKind::truncated_stable:
            return radius <= spec_.r0 ? 0.0 : power_piece(std::log(c0), 1.0 - a, spec_.r0, radius);
        case ModelKind::pure_stable:
            return power_piece(std::log(c0), 1.0 - a, 0.0, radius);
        case ModelKind::compact_support:
        {
            double const hi = std::clamp(radius, spec_.r_inner, spec_.r_outer);
            return 0.25 * spec_.level * (std::pow(hi, 4) - std::pow(spec_.r_inner, 4));
        }
    }
    return 0.0;
}

PowerLaw LevyModel::origin_law() const
{
    double const e = -2.0 - spec_.alpha;
    switch (spec_.kind)
    {
        case ModelKind::smoothed_pareto: return {spec_.c0_tail, 0.0, kOriginCut};
        case ModelKind::truncated_stable: return {0.0, 0.0, spec_.r0};
        case ModelKind::pure_stable: return {spec_.c0_tail, e, kInf};
        case ModelKind::compact_support: return {0.0, 0.0, spec_.r_inner};
    }
    return {};
}

PowerLaw LevyModel::tail_law() const
{
    double const e = -2.0 - spec_.alpha;
    switch (spec_.kind)
    {
        case ModelKind::smoothed_pareto: return {spec_.c0_tail, e, kTailCut};
        case ModelKind::truncated_stable: return {spec_.c0_tail, e, spec_.r0};
        case ModelKind::pure_stable: return {spec_.c0_tail, e, 0.0};
        case ModelKind::compact_support: return {0.0, 0.0, spec_.r_outer};
    }
    return {};
}

std::vector<RadialJump> LevyModel::jumps() const
{
    switch (spec_.kind)
    {
        case ModelKind::truncated_stable:
            return {{spec_.r0, spec_.c0_tail * std::pow(spec_.r0, -2.0 - spec_.alpha)}};
        case ModelKind::compact_support:
        {
            std::vector<RadialJump> out;
            if (spec_.r_inner > 0.0)
                out.push_back({spec_.r_inner, spec_.level});
            out.push_back({spec_.r_outer, -spec_.level});
            return out;
        }
        default: return {};
    }
}

std::vector<double> LevyModel::features() const
{
    switch (spec_.kind)
    {
        case ModelKind::truncated_stable: return {spec_.r0};
        case ModelKind::compact_support:
            if (spec_.r_inner > 0.0)
                return {spec_.r_inner, spec_.r_outer};
            return {spec_.r_outer};
        default: return {1.0};
    }
}

double LevyModel::radial_integral(std::function<double(double)> const& w, double w_exponent,
                                  double a, double b, int per_decade) const
{
    require(a >= 0.0 && b >= a, "radial_integral: need 0 <= a <= b");
    auto const feats = features();
    double const fmin = *std::min_element(feats.begin(), feats.end());
    double const fmax = *std::max_element(feats.begin(), feats.end());
    double total = 0.0;

    PowerLaw const o = origin_law();
    double lo = a;
    if (o.coef == 0.0)
    {
        lo = std::max(a, o.exact_within);
    }
    else
    {
        double const cut = std::min({o.exact_within, kOriginCut, 0.1 * fmin});
        if (a < cut)
        {
            double const log_w = std::log(w(cut)) - w_exponent * std::log(cut);
            total += power_piece(std::log(o.coef) + log_w, o.exponent + w_exponent, a,
                                 std::min(b, cut));
            lo = std::min(b, cut);
        }
    }

    PowerLaw const t = tail_law();
    double hi = b;
    if (t.coef == 0.0)
    {
        hi = std::min(b, t.exact_within);
    }
    else
    {
        double const cut = std::max({t.exact_within, kTailCut, 10.0 * fmax});
        if (b > cut)
        {
            double const log_w = std::log(w(cut)) - w_exponent * std::log(cut);
            total += power_piece(std::log(t.coef) + log_w, t.exponent + w_exponent,
                                 std::max(a, cut), b);
            hi = std::max(a, cut);
        }
    }
    if (std::isinf(total))
        return kInf;
    if (hi <= lo)
        return total;

    std::vector<double> breaks;
    if (lo > 0.0)
    {
        breaks = quad::geometric_breaks(lo, hi, per_decade);
    }
    else
    {
        breaks = quad::geometric_breaks(std::min(hi, kOriginCut) * 1e-3, hi, per_decade);
        breaks.insert(breaks.begin(), 0.0);
    }
    for (double f : feats)
        if (f > lo && f < hi)
            breaks.push_back(f);
    std::sort(breaks.begin(), breaks.end());

    auto integrand = [&](double r) { return w(r) * radial_density(r); };
    total += quad::panels(integrand, breaks).value;
    return total;
}

TailDominationReport verify_tail_domination(LevyModel const& model, std::vector<double> const& radii,
                                      double tol)
{
    require_domain(model.heavy_tailed(),
                   "Assumption (A) cannot hold for a compact-support model");
    require(!radii.empty(), "verify_tail_domination: empty radius grid");
    for (std::size_t k = 0; k < radii.size(); ++k)
    {
        require(radii[k] > 0.0, "verify_tail_domination: radii must be positive");
        require(k == 0 || radii[k] > radii[k - 1], "verify_tail_domination: radii must increase");
    }
    double const e = 2.0 + model.alpha();
    TailDominationReport rep;
    rep.ratio_curve.reserve(radii.size());
    for (double r : radii)
    {
        double const scaled = model.radial_density(r) * std::pow(r, e);
        rep.ratio_curve.push_back(scaled / model.c0_tail());
        rep.max_violation = std::max(rep.max_violation, scaled / model.c_bound() - 1.0);
    }
    rep.pass = std::abs(rep.ratio_curve.back() - 1.0) <= tol && rep.max_violation <= 1e-12;
    return rep;
}

double admissibility_integral(LevyModel const& model, int per_decade)
{
    double const inner = model.radial_integral([](double r) { return r * r * r; }, 3.0, 0.0, 1.0,
                                               per_decade);
    double const outer = model.radial_integral([](double r) { return r; }, 1.0, 1.0, kInf,
                                               per_decade);
    return kTwoPi * (inner + outer);
}

namespace {

double real_part_moment_at(LevyModel const& model, double p, MomentRegion region,
                           int radial_ppd, int angular_ppd)
{
    // v = pi/2 - phi, so |cos phi| = sin v; the quarter circle is repeated 4x.
    // |x_1|^p = (r sin v)^p is kept in one power so large p cannot overflow.
    auto angular = [&](double v) {
        double const c = std::sin(v);
        double const edge = 1.0 / c;
        auto weight = [p, c](double r) { return std::pow(c * r, p) * r; };
        return region == MomentRegion::outer
                   ? model.radial_integral(weight, p + 1.0, edge, kInf, radial_ppd)
                   : model.radial_integral(weight, p + 1.0, 0.0, edge, radial_ppd);
    };
    auto breaks = quad::geometric_breaks(1e-12, std::numbers::pi / 2, angular_ppd);
    return 4.0 * quad::panels(angular, breaks).value;
}

}  // namespace

double real_part_moment(LevyModel const& model, double p, MomentRegion region)
{
    require_domain(p > 0.0, "real_part_moment: p must be positive");
    if (region == MomentRegion::outer)
    {
        PowerLaw const t = model.tail_law();
        if (t.coef == 0.0 && t.exact_within <= 1.0)
            return 0.0;
        if (t.coef != 0.0 && p + t.exponent + 2.0 >= 0.0)
            return kInf;
    }
    else
    {
        PowerLaw const o = model.origin_law();
        if (o.coef != 0.0 && p + o.exponent + 2.0 <= 0.0)
            return kInf;
    }
    double const coarse = real_part_moment_at(model, p, region, 4, 3);
    double const fine = real_part_moment_at(model, p, region, 8, 6);
    if (std::abs(fine - coarse) > 1e-6 * std::abs(fine) + 1e-300)
        throw NonConvergenceError("real_part_moment: mesh refinement changed the value by "
                                  + std::to_string(std::abs(fine - coarse)));
    return fine;
}

}  // namespace hflm
