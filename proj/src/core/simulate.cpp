// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#include "simulate.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "error.hpp"
#include "quadrature.hpp"
#include "stable_limit.hpp"

namespace hflm {
namespace {

constexpr double kPi = std::numbers::pi;

// Stream purposes, so different samplers never share draws.
constexpr std::uint32_t kHflmStream = 1;
constexpr std::uint32_t kHfsmStream = 2;
constexpr std::uint32_t kFbmStream = 3;

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template<class Fn>
void parallel_paths(std::size_t n_paths, unsigned threads, Fn const& fn)
{
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, n_paths))));
    if (threads == 1)
    {
        for (std::size_t i = 0; i < n_paths; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned w = 0; w < threads; ++w)
    {
        pool.emplace_back([&, w] {
            try
            {
                for (std::size_t i = w; i < n_paths; i += threads)
                    fn(i);
            }
            catch (...)
            {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (auto const& e : errors)
        if (e)
            std::rethrow_exception(e);
}

void check_times(std::vector<double> const& times)
{
    require(!times.empty(), "time grid must not be empty");
    for (std::size_t j = 0; j < times.size(); ++j)
    {
        require(std::isfinite(times[j]), "time grid entries must be finite");
        require(j == 0 || times[j] > times[j - 1], "time grid must be increasing");
    }
}

double weight_sum(FddSpec const& fdd)
{
    double acc = 0.0;
    for (std::size_t j = 0; j < fdd.size(); ++j)
        if (fdd.times[j] != 0.0)
            acc += std::hypot(fdd.theta1[j], fdd.theta2[j]);
    return acc;
}

// Radius of one jump, distributed as f(r) r dr / mass.
double sample_radius(LevyModel const& model, RngStream& rng)
{
    auto const& s = model.spec();
    switch (s.kind)
    {
        case ModelKind::smoothed_pareto:
            // y = 1 + r has density proportional to y^(-1-alpha) (1 - 1/y).
            for (;;)
            {
                double const y = std::pow(rng.uniform(), -1.0 / s.alpha);
                if (rng.uniform() < 1.0 - 1.0 / y)
                    return y - 1.0;
            }
        case ModelKind::truncated_stable: return s.r0 * std::pow(rng.uniform(), -1.0 / s.alpha);
        case ModelKind::compact_support:
        {
            double const a = s.r_inner * s.r_inner;
            double const b = s.r_outer * s.r_outer;
            return std::sqrt(a + rng.uniform() * (b - a));
        }
        case ModelKind::pure_stable: break;
    }
    throw DomainError("pure-stable model has infinite jump intensity");
}

}  // namespace

std::size_t PathEnsemble::time_index(double t) const
{
    for (std::size_t j = 0; j < times.size(); ++j)
        if (times[j] == t)
            return j;
    throw InvalidArgument("time " + fmt(t) + " is not on the ensemble grid");
}

PsiBound psi_bound(LevyModel const& model)
{
    if (model.heavy_tailed())
    {
        auto const& k = stable_constants(model.alpha());
        return {model.c_bound() * k.kappa * k.c1, model.alpha()};
    }
    return {0.5 * kPi * model.inner_moment2(kInf), 2.0};
}

double spectral_tail_bound(ProcessParams const& params, std::vector<FddSpec> const& probes,
                           PsiBound bound, double s_cap)
{
    params.validate();
    require(s_cap > 0.0, "s_cap must be positive");
    double const e = (params.weight_exponent() - 1.0) * bound.q_psi + 1.0;
    if (e >= 0.0)
        return kInf;
    double worst = 0.0;
    for (auto const& fdd : probes)
    {
        double const theta = weight_sum(fdd);
        double acc = 0.0;
        for (double coef : {params.a, params.b})
            if (coef != 0.0)
                acc += bound.k_psi * std::pow(2.0 * std::abs(coef) * theta, bound.q_psi)
                       * std::pow(s_cap, e) / -e;
        worst = std::max(worst, acc);
    }
    return worst;
}

TruncationCheck choose_s_cap(ProcessParams const& params, std::vector<FddSpec> const& probes,
                             PsiBound bound, double tol)
{
    require(tol > 0.0, "truncation tolerance must be positive");
    double const e = (params.weight_exponent() - 1.0) * bound.q_psi + 1.0;
    require_domain(e < 0.0, "spectral tail is not integrable for these parameters");
    double const at_one = spectral_tail_bound(params, probes, bound, 1.0);
    double const cap = std::max(1.0, std::pow(at_one / tol, 1.0 / -e) * (1.0 + 1e-9));
    return {cap, spectral_tail_bound(params, probes, bound, cap), tol};
}

PathEnsemble sample_hflm(LevyModel const& model, ProcessParams const& params,
                         std::vector<double> const& times, double s_cap,
                         std::vector<FddSpec> const& probes, double tol, SimOptions const& opts)
{
    params.validate();
    check_times(times);
    require_domain(model.finite_mass(), "shot-noise simulation needs a finite-mass model");
    require(opts.n_paths >= 1, "n_paths must be >= 1");
    double const bound = spectral_tail_bound(params, probes, psi_bound(model), s_cap);
    if (!(bound <= tol))
        throw DomainError("s_cap " + fmt(s_cap) + " leaves a tail bound " + fmt(bound)
                          + " above the tolerance " + fmt(tol));

    double const mass = model.total_mass();
    double const s_lo = params.b != 0.0 ? -s_cap : 0.0;
    double const s_hi = params.a != 0.0 ? s_cap : 0.0;

    PathEnsemble ens;
    ens.times = times;
    ens.n_paths = opts.n_paths;
    ens.seed = opts.seed;
    ens.process = "hflm";
    ens.paths.assign(opts.n_paths * times.size(), {0.0, 0.0});
    std::size_t const nt = times.size();

    parallel_paths(opts.n_paths, opts.threads, [&](std::size_t path) {
        RngStream rng(opts.seed, path, kHflmStream);
        std::complex<double>* row = &ens.paths[path * nt];
        double s = s_lo;
        for (;;)
        {
            s += rng.exponential() / mass;
            if (s >= s_hi)
                break;
            double const r = sample_radius(model, rng);
            double const phi = 2.0 * kPi * rng.uniform();
            if (s == 0.0)
                continue;
            double const w = spectral_weight(params, s);
            std::complex<double> const jump = std::polar(r, phi) * w;
            for (std::size_t j = 0; j < nt; ++j)
                if (times[j] != 0.0)
                    row[j] += phase_factor(times[j], s) * jump;
        }
    });

    ens.metadata["method"] = "poisson-shot-noise";
    ens.metadata["model"] = std::string(to_string(model.kind()));
    ens.metadata["model_alpha"] = fmt(model.alpha());
    ens.metadata["c0_tail"] = fmt(model.c0_tail());
    ens.metadata["alpha"] = fmt(params.alpha);
    ens.metadata["hurst"] = fmt(params.hurst);
    ens.metadata["a"] = fmt(params.a);
    ens.metadata["b"] = fmt(params.b);
    ens.metadata["jump_intensity"] = fmt(mass);
    ens.metadata["s_cap"] = fmt(s_cap);
    ens.metadata["tail_bound"] = fmt(bound);
    ens.metadata["tail_tolerance"] = fmt(tol);
    return ens;
}

SpectralGrid hfsm_spectral_grid(ProcessParams const& params, std::vector<double> const& times,
                                double s_cap, int gl_order, double floor_rel)
{
    params.validate();
    check_times(times);
    require(gl_order >= 1 && floor_rel > 0.0 && floor_rel < 1.0, "bad spectral grid controls");
    double tmax = 0.0;
    for (double t : times)
        tmax = std::max(tmax, std::abs(t));
    require(tmax > 0.0, "time grid must contain a nonzero time");
    double const near_top = 1.0 / tmax;
    require(s_cap > near_top, "s_cap must exceed 1 / max|t|");

    quad::GaussLegendre const gl(gl_order);
    std::vector<double> nodes, weights;
    double const floor = floor_rel * near_top;
    // [0, floor]: |g|^alpha ~ s^(p alpha), so a single node at the floor with
    // weight floor / (1 + p alpha) reproduces the integral of the power law.
    double const local = 1.0 + params.weight_exponent() * params.alpha;
    require_domain(local > 0.0, "spectral integrand is not integrable at s = 0");
    nodes.push_back(floor);
    weights.push_back(floor / local);
    auto add_panels = [&](std::vector<double> const& breaks) {
        for (std::size_t k = 0; k + 1 < breaks.size(); ++k)
        {
            double const c = 0.5 * (breaks[k] + breaks[k + 1]);
            double const h = 0.5 * (breaks[k + 1] - breaks[k]);
            for (int i = 0; i < gl.order(); ++i)
            {
                nodes.push_back(c + h * gl.nodes()[i]);
                weights.push_back(h * gl.weights()[i]);
            }
        }
    };
    add_panels(quad::geometric_breaks(floor, near_top, 4));
    add_panels(quad::uniform_breaks(near_top, s_cap, kPi / tmax));

    SpectralGrid grid;
    grid.s_cap = s_cap;
    if (params.a != 0.0)
    {
        grid.nodes.insert(grid.nodes.end(), nodes.begin(), nodes.end());
        grid.weights.insert(grid.weights.end(), weights.begin(), weights.end());
    }
    if (params.b != 0.0)
    {
        for (std::size_t k = 0; k < nodes.size(); ++k)
        {
            grid.nodes.push_back(-nodes[k]);
            grid.weights.push_back(weights[k]);
        }
    }
    FddSpec const unit{{1.0}, {1.0}, {0.0}};
    auto const& k = stable_constants(params.alpha);
    grid.tail_bound =
        spectral_tail_bound(params, {unit}, PsiBound{k.kappa * k.c1, params.alpha}, s_cap);
    return grid;
}

double positive_stable(double a, RngStream& rng)
{
    // Kanter's representation.
    double const u = kPi * rng.uniform();
    double const e = rng.exponential();
    double const left = std::sin(a * u) / std::pow(std::sin(u), 1.0 / a);
    return left * std::pow(std::sin((1.0 - a) * u) / e, (1.0 - a) / a);
}

PathEnsemble sample_hfsm(ProcessParams const& params, std::vector<double> const& times,
                         SpectralGrid const& grid, double c0_tail, SimOptions const& opts)
{
    params.validate();
    check_times(times);
    require(c0_tail > 0.0, "c0_tail must be positive");
    require(!grid.nodes.empty() && grid.nodes.size() == grid.weights.size(), "empty spectral grid");
    double const alpha = params.alpha;
    double const half = 0.5 * alpha;
    auto const& k = stable_constants(alpha);
    std::size_t const nk = grid.nodes.size();
    std::size_t const nt = times.size();

    // Per-node scale of A and the kernel values, shared by every path.
    std::vector<double> a_scale(nk);
    std::vector<std::complex<double>> f(nk * nt);
    for (std::size_t i = 0; i < nk; ++i)
    {
        double const gamma = std::pow(2.0, half) * c0_tail * k.kappa * k.c1 * grid.weights[i];
        a_scale[i] = std::pow(gamma, 1.0 / half);
        for (std::size_t j = 0; j < nt; ++j)
            f[i * nt + j] = times[j] == 0.0 ? std::complex<double>{} : kernel(params, times[j], grid.nodes[i]);
    }

    PathEnsemble ens;
    ens.times = times;
    ens.n_paths = opts.n_paths;
    ens.seed = opts.seed;
    ens.process = "hfsm";
    ens.paths.assign(opts.n_paths * nt, {0.0, 0.0});
    parallel_paths(opts.n_paths, opts.threads, [&](std::size_t path) {
        RngStream rng(opts.seed, path, kHfsmStream);
        std::complex<double>* row = &ens.paths[path * nt];
        for (std::size_t i = 0; i < nk; ++i)
        {
            double const amp = std::sqrt(a_scale[i] * positive_stable(half, rng));
            std::complex<double> const m{amp * rng.normal(), amp * rng.normal()};
            for (std::size_t j = 0; j < nt; ++j)
                row[j] += f[i * nt + j] * m;
        }
    });
    ens.metadata["method"] = "sub-gaussian-spectral-sum";
    ens.metadata["alpha"] = fmt(alpha);
    ens.metadata["hurst"] = fmt(params.hurst);
    ens.metadata["a"] = fmt(params.a);
    ens.metadata["b"] = fmt(params.b);
    ens.metadata["c0_tail"] = fmt(c0_tail);
    ens.metadata["spectral_nodes"] = std::to_string(nk);
    ens.metadata["s_cap"] = fmt(grid.s_cap);
    ens.metadata["tail_bound_unit_probe"] = fmt(grid.tail_bound * c0_tail);
    return ens;
}

PathEnsemble sample_fbm(double hurst, std::vector<double> const& times, SimOptions const& opts)
{
    require_domain(hurst > 0.0 && hurst < 1.0, "hurst must lie in (0,1)");
    check_times(times);
    require(times.size() <= 2048, "fBm grid is limited to 2048 times");
    std::vector<std::size_t> live;
    for (std::size_t j = 0; j < times.size(); ++j)
        if (times[j] != 0.0)
            live.push_back(j);
    auto const n = static_cast<Eigen::Index>(live.size());
    Eigen::MatrixXd gram(n, n);
    double const h2 = 2.0 * hurst;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
        {
            double const s = times[live[i]], t = times[live[j]];
            gram(i, j) = 0.5 * (std::pow(std::abs(t), h2) + std::pow(std::abs(s), h2)
                                - std::pow(std::abs(s - t), h2));
        }
    Eigen::LLT<Eigen::MatrixXd> llt(gram);
    if (llt.info() != Eigen::Success)
        throw DomainError("fBm covariance matrix is not numerically positive definite");
    Eigen::MatrixXd const lower = llt.matrixL();

    PathEnsemble ens;
    ens.times = times;
    ens.n_paths = opts.n_paths;
    ens.seed = opts.seed;
    ens.process = "fbm";
    std::size_t const nt = times.size();
    ens.paths.assign(opts.n_paths * nt, {0.0, 0.0});
    parallel_paths(opts.n_paths, opts.threads, [&](std::size_t path) {
        RngStream rng(opts.seed, path, kFbmStream);
        Eigen::VectorXd z(n);
        for (Eigen::Index i = 0; i < n; ++i)
            z(i) = rng.normal();
        Eigen::VectorXd const x = lower * z;
        for (Eigen::Index i = 0; i < n; ++i)
            ens.paths[path * nt + live[i]] = {x(i), 0.0};
    });
    ens.metadata["method"] = "cholesky";
    ens.metadata["hurst"] = fmt(hurst);
    return ens;
}

std::vector<double> probe_samples(PathEnsemble const& ens, FddSpec const& fdd)
{
    fdd.validate();
    std::vector<std::size_t> idx;
    for (double t : fdd.times)
        idx.push_back(ens.time_index(t));
    std::vector<double> y(ens.n_paths, 0.0);
    for (std::size_t i = 0; i < ens.n_paths; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
        {
            auto const x = ens.at(i, idx[j]);
            y[i] += fdd.theta1[j] * x.real() + fdd.theta2[j] * x.imag();
        }
    return y;
}

EmpiricalChf empirical_log_chf(PathEnsemble const& ens, FddSpec const& fdd)
{
    require(ens.n_paths >= 2, "empirical_log_chf needs at least two paths");
    auto const y = probe_samples(ens, fdd);
    double c = 0.0, s = 0.0;
    for (double v : y)
    {
        c += std::cos(v);
        s += std::sin(v);
    }
    auto const n = static_cast<double>(y.size());
    c /= n;
    s /= n;
    double const mod = std::hypot(c, s);
    double const arg = std::atan2(s, c);
    // Delta method: log|phi| moves with the component along the mean direction.
    double var = 0.0;
    for (double v : y)
    {
        double const d = std::cos(v - arg) - mod;
        var += d * d;
    }
    var /= (n - 1.0);
    EmpiricalChf out;
    out.estimate = std::log(mod);
    out.std_error = std::sqrt(var / n) / mod;
    out.imag_mean = s;
    return out;
}

void write_ensemble_csv(PathEnsemble const& ens, std::ostream& out,
                        std::vector<std::string> const& header)
{
    for (auto const& line : header)
        out << "# " << line << "\r\n";
    out << "path,t,re,im\r\n";
    for (std::size_t i = 0; i < ens.n_paths; ++i)
        for (std::size_t j = 0; j < ens.times.size(); ++j)
        {
            auto const x = ens.at(i, j);
            out << i << ',' << fmt(ens.times[j]) << ',' << fmt(x.real()) << ',' << fmt(x.imag())
                << "\r\n";
        }
}

void write_ensemble_metadata(PathEnsemble const& ens, std::ostream& out)
{
    out << "process=" << ens.process << "\n";
    out << "seed=" << ens.seed << "\n";
    out << "n_paths=" << ens.n_paths << "\n";
    out << "n_times=" << ens.times.size() << "\n";
    for (auto const& [key, value] : ens.metadata)
        out << key << "=" << value << "\n";
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b)
{
    require(!a.empty() && !b.empty(), "ks_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    auto const na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    while (i < a.size() && j < b.size())
    {
        double const x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x)
            ++i;
        while (j < b.size() && b[j] <= x)
            ++j;
        d = std::max(d, std::abs(i / na - j / nb));
    }
    double const ne = std::sqrt(na * nb / (na + nb));
    double const lambda = (ne + 0.12 + 0.11 / ne) * d;
    double q = 0.0;
    if (lambda < 0.3)
        q = 1.0;
    else
    {
        for (int k = 1; k <= 100; ++k)
        {
            double const term = 2.0 * ((k % 2 == 1) ? 1.0 : -1.0) * std::exp(-2.0 * k * k * lambda * lambda);
            q += term;
            if (std::abs(term) < 1e-12)
                break;
        }
        q = std::clamp(q, 0.0, 1.0);
    }
    return {d, q};
}

}  // namespace hflm
