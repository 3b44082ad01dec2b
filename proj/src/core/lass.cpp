// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#include "lass.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "error.hpp"
#include "existence.hpp"
#include "stable_limit.hpp"

namespace hflm {
namespace {

void check_schedule(std::vector<double> const& eps)
{
    require(eps.size() >= 3, "eps schedule needs at least three points");
    for (std::size_t k = 0; k < eps.size(); ++k)
    {
        require(eps[k] > 0.0, "eps schedule must be positive");
        require(k == 0 || eps[k] < eps[k - 1], "eps schedule must decrease");
    }
}

std::vector<double> ranks(std::vector<double> const& v)
{
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return v[i] < v[j]; });
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < idx.size();)
    {
        std::size_t j = i;
        while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]])
            ++j;
        double const avg = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k)
            r[idx[k]] = avg;
        i = j + 1;
    }
    return r;
}

std::vector<double> logs(std::vector<double> const& v)
{
    std::vector<double> out;
    out.reserve(v.size());
    for (double x : v)
        out.push_back(std::log(std::abs(x)));
    return out;
}

}  // namespace

double ols_slope(std::vector<double> const& x, std::vector<double> const& y)
{
    require(x.size() == y.size() && x.size() >= 2, "ols_slope: need two matching points");
    double const n = static_cast<double>(x.size());
    double const mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double const my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k)
    {
        sxy += (x[k] - mx) * (y[k] - my);
        sxx += (x[k] - mx) * (x[k] - mx);
    }
    require(sxx > 0.0, "ols_slope: x values are all equal");
    return sxy / sxx;
}

double spearman(std::vector<double> const& x, std::vector<double> const& y)
{
    require(x.size() == y.size() && x.size() >= 2, "spearman: need two matching samples");
    auto const rx = ranks(x);
    auto const ry = ranks(y);
    double const n = static_cast<double>(x.size());
    double const m = 0.5 * (n + 1.0);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t k = 0; k < rx.size(); ++k)
    {
        sxy += (rx[k] - m) * (ry[k] - m);
        sxx += (rx[k] - m) * (rx[k] - m);
        syy += (ry[k] - m) * (ry[k] - m);
    }
    if (sxx == 0.0 || syy == 0.0)
        return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

LassReport lass_report(ChfEngine const& engine, ProcessParams const& params, FddSpec const& fdd,
                       std::vector<double> const& eps_schedule, double target_rel)
{
    params.validate();
    check_schedule(eps_schedule);
    LevyModel const& model = engine.exponent().model();
    require_domain(model.heavy_tailed(), "stable tangent limit needs a heavy-tailed model");
    require_domain(model.alpha() == params.alpha,
                   "model tail index and process alpha must coincide");
    std::vector<double> radii;
    for (double r = 1e-2; r <= 1e6 * (1.0 + 1e-12); r *= 10.0)
        radii.push_back(r);
    auto const tail = verify_tail_domination(model, radii, 1e-3);
    require_domain(tail.pass, "model violates the heavy-tail domination assumption");
    require_domain(hflm_existence(model, params).exists,
                   "process does not exist for these parameters");

    LassReport rep;
    rep.eps = eps_schedule;
    rep.target_rel = target_rel;
    rep.a_limit = log_chf_limit(params, fdd, model.c0_tail(), engine.exponent().quad_spec());
    for (double e : eps_schedule)
    {
        auto const a = engine.log_chf_fdd(params, fdd, e);
        rep.a_eps.push_back(a.value);
        rep.a_eps_error.push_back(a.error);
        double const err = std::abs(a.value - rep.a_limit);
        rep.abs_err.push_back(err);
        rep.rel_err.push_back(err / std::abs(rep.a_limit));
    }
    rep.slope = ols_slope(logs(rep.eps), logs(rep.abs_err));
    rep.spearman = spearman(rep.eps, rep.abs_err);
    rep.pass = rep.rel_err.back() < target_rel;
    return rep;
}

IndexCheck rescaling_check(ChfEngine const& engine, ProcessParams const& params,
                           FddSpec const& fdd, std::vector<double> const& eps_schedule,
                           LassReport const& reference, double index)
{
    check_schedule(eps_schedule);
    require(reference.a_eps.size() == eps_schedule.size(),
            "rescaling_check: reference report has a different schedule");
    IndexCheck out;
    out.index = index;
    out.expected_slope = (params.hurst - index) * params.alpha;
    ChfOptions opts;
    opts.rescale_index = index;
    std::vector<double> x, y;
    std::size_t const first = eps_schedule.size() / 2;
    for (std::size_t k = 0; k < eps_schedule.size(); ++k)
    {
        double const a = engine.log_chf_fdd(params, fdd, eps_schedule[k], opts).value;
        out.a_eps.push_back(a);
        if (k >= first)
        {
            x.push_back(std::log(eps_schedule[k]));
            y.push_back(std::log(std::abs(a / reference.a_eps[k])));
        }
    }
    out.slope = ols_slope(x, y);
    out.diverges = out.expected_slope != 0.0 && out.slope * out.expected_slope > 0.0
                   && std::abs(out.slope) >= 0.5 * std::abs(out.expected_slope);
    return out;
}

GaussianTangentReport gaussian_tangent_report(ChfEngine const& engine,
                                              ProcessParams const& params,
                                              std::vector<double> const& times,
                                              std::vector<double> const& eps_schedule)
{
    params.validate();
    check_schedule(eps_schedule);
    require(!times.empty(), "gaussian tangent: need at least one time");
    for (double t : times)
        require(t > 0.0, "gaussian tangent: times must be positive");
    LevyModel const& model = engine.exponent().model();
    require_domain(!model.heavy_tailed(), "gaussian tangent needs a compact-support model");
    double const hg = params.hurst + 1.0 / params.alpha - 0.5;
    require_domain(hg > 0.0 && hg < 1.0, "H + 1/alpha - 1/2 must lie in (0,1)");

    GaussianTangentReport rep;
    rep.hurst_gaussian = hg;
    rep.eps = eps_schedule;
    std::size_t const n = times.size();
    ChfOptions opts;
    opts.rescale_index = hg;

    // e_j, or e_j + e_k when k != j, on the real parts.
    auto unit = [&](std::size_t j, std::size_t k) {
        FddSpec f{times, std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
        f.theta1[j] = 1.0;
        f.theta1[k] = 1.0;
        return f;
    };
    for (double e : eps_schedule)
    {
        std::vector<double> single(n);
        for (std::size_t j = 0; j < n; ++j)
            single[j] = engine.log_chf_fdd(params, unit(j, j), e, opts).value;
        std::vector<double> s(n * n);
        for (std::size_t j = 0; j < n; ++j)
        {
            s[j * n + j] = -2.0 * single[j];
            for (std::size_t k = j + 1; k < n; ++k)
            {
                double const pair = engine.log_chf_fdd(params, unit(j, k), e, opts).value;
                s[j * n + k] = s[k * n + j] = -(pair - single[j] - single[k]);
            }
        }
        rep.sigma.push_back(std::move(s));
    }

    rep.gram.resize(n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            rep.gram[j * n + k] = 0.5
                                  * (std::pow(times[j], 2 * hg) + std::pow(times[k], 2 * hg)
                                     - std::pow(std::abs(times[j] - times[k]), 2 * hg));
    auto const& last = rep.sigma.back();
    double num = 0.0, den = 0.0, gmax = 0.0;
    for (std::size_t i = 0; i < n * n; ++i)
    {
        num += last[i] * rep.gram[i];
        den += rep.gram[i] * rep.gram[i];
        gmax = std::max(gmax, std::abs(rep.gram[i]));
    }
    rep.scale = num / den;
    for (std::size_t i = 0; i < n * n; ++i)
        rep.residual = std::max(rep.residual, std::abs(last[i] / rep.scale - rep.gram[i]) / gmax);
    if (n >= 2)
    {
        rep.ratio = last[1] / last[0];
        rep.ratio_expected = rep.gram[1] / rep.gram[0];
    }
    for (auto const& s : rep.sigma)
        rep.diag_ratio.push_back(s[0] / last[0]);
    return rep;
}

}  // namespace hflm
