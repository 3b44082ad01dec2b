// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#include "hflm/hflm.h"

#include <cmath>
#include <exception>
#include <fstream>
#include <new>
#include <string>
#include <vector>

#include "chf_engine.hpp"
#include "error.hpp"
#include "existence.hpp"
#include "lass.hpp"
#include "simulate.hpp"
#include "stable_limit.hpp"

struct hflm_model
{
    hflm::LevyModel impl;
};

struct hflm_engine
{
    hflm::ChfEngine impl;
};

struct hflm_ensemble
{
    hflm::PathEnsemble impl;
};

namespace {

thread_local std::string g_last_error;

template <class F>
hflm_status guarded(F&& body)
{
    try
    {
        g_last_error.clear();
        body();
        return HFLM_OK;
    }
    catch (hflm::DomainError const& e)
    {
        g_last_error = e.what();
        return HFLM_ERR_DOMAIN;
    }
    catch (hflm::NonConvergenceError const& e)
    {
        g_last_error = e.what();
        return HFLM_ERR_NONCONVERGENCE;
    }
    catch (hflm::InvalidArgument const& e)
    {
        g_last_error = e.what();
        return HFLM_ERR_INVALID;
    }
    catch (std::bad_alloc const&)
    {
        g_last_error = "out of memory";
        return HFLM_ERR_INTERNAL;
    }
    catch (std::exception const& e)
    {
        g_last_error = e.what();
        return HFLM_ERR_INTERNAL;
    }
    catch (...)
    {
        g_last_error = "unknown exception";
        return HFLM_ERR_INTERNAL;
    }
}

void need(void const* p, char const* what)
{
    hflm::require(p != nullptr, std::string(what) + " must not be NULL");
}

hflm::ModelSpec to_cpp(hflm_model_spec const& s)
{
    hflm::ModelSpec m;
    switch (s.kind)
    {
    case HFLM_SMOOTHED_PARETO: m.kind = hflm::ModelKind::smoothed_pareto; break;
    case HFLM_TRUNCATED_STABLE: m.kind = hflm::ModelKind::truncated_stable; break;
    case HFLM_PURE_STABLE: m.kind = hflm::ModelKind::pure_stable; break;
    case HFLM_COMPACT_SUPPORT: m.kind = hflm::ModelKind::compact_support; break;
    default: throw hflm::InvalidArgument("unknown model kind");
    }
    m.alpha = s.alpha;
    m.c0_tail = s.c0_tail;
    m.c_bound = s.c_bound;
    m.r0 = s.r0;
    m.r_inner = s.r_inner;
    m.r_outer = s.r_outer;
    m.level = s.level;
    return m;
}

hflm::ProcessParams to_cpp(hflm_process const* p)
{
    need(p, "process");
    return {p->alpha, p->hurst, p->a, p->b};
}

hflm::QuadSpec to_cpp(hflm_quad_spec const* q)
{
    hflm::QuadSpec qs;
    if (q == nullptr)
        return qs;
    qs.abs_tol = q->abs_tol;
    qs.rel_tol = q->rel_tol;
    qs.u_max = q->u_max;
    qs.r_max = q->r_max;
    qs.panels_per_decade = q->panels_per_decade;
    qs.floor_decades = q->floor_decades;
    qs.spectral_periods = q->spectral_periods;
    qs.cache_per_decade = q->cache_per_decade;
    qs.cache_rho_min = q->cache_rho_min;
    qs.cache_rho_max = q->cache_rho_max;
    qs.validate();
    return qs;
}

hflm::FddSpec to_cpp(hflm_probe const* p)
{
    need(p, "probe");
    hflm::require(p->n > 0, "probe must contain at least one time");
    need(p->times, "probe times");
    hflm::FddSpec f;
    f.times.assign(p->times, p->times + p->n);
    f.theta1 = p->theta1 ? std::vector<double>(p->theta1, p->theta1 + p->n)
                         : std::vector<double>(p->n, 0.0);
    f.theta2 = p->theta2 ? std::vector<double>(p->theta2, p->theta2 + p->n)
                         : std::vector<double>(p->n, 0.0);
    f.validate();
    return f;
}

std::vector<hflm::FddSpec> to_cpp(hflm_probe const* probes, std::size_t n)
{
    hflm::require(n == 0 || probes != nullptr, "probes must not be NULL");
    std::vector<hflm::FddSpec> out;
    for (std::size_t k = 0; k < n; ++k)
        out.push_back(to_cpp(probes + k));
    return out;
}

std::vector<double> array(double const* x, std::size_t n, char const* what)
{
    hflm::require(n > 0, std::string(what) + " must not be empty");
    need(x, what);
    return {x, x + n};
}

hflm::SimOptions to_cpp(hflm_sim_options const* o)
{
    hflm::SimOptions s;
    if (o != nullptr)
    {
        s.n_paths = o->n_paths;
        s.seed = o->seed;
        s.threads = o->threads;
    }
    return s;
}

hflm::ExistenceQuery to_cpp(hflm_lemma_query const* q)
{
    need(q, "query");
    hflm::ExistenceQuery e;
    e.beta = q->beta;
    e.gamma = q->gamma;
    e.nu = {q->k, q->delta, q->tau};
    e.bounds_only = q->bounds_only != 0;
    e.validate();
    return e;
}

}  // namespace

extern "C" {

const char* hflm_version(void)
{
    return HFLM_VERSION_STRING;
}

const char* hflm_last_error(void)
{
    return g_last_error.c_str();
}

const char* hflm_status_name(hflm_status status)
{
    switch (status)
    {
    case HFLM_OK: return "ok";
    case HFLM_ERR_DOMAIN: return "domain error";
    case HFLM_ERR_NONCONVERGENCE: return "non-convergence";
    case HFLM_ERR_INVALID: return "invalid argument";
    case HFLM_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void hflm_model_spec_default(hflm_model_spec* spec)
{
    if (spec == nullptr)
        return;
    hflm::ModelSpec const d;
    *spec = {HFLM_SMOOTHED_PARETO, d.alpha, d.c0_tail, d.c_bound, d.r0, d.r_inner, d.r_outer,
             d.level};
}

void hflm_quad_spec_default(hflm_quad_spec* qs)
{
    if (qs == nullptr)
        return;
    hflm::QuadSpec const d;
    *qs = {d.abs_tol,          d.rel_tol,          d.u_max,           d.r_max,
           d.panels_per_decade, d.floor_decades,    d.spectral_periods, d.cache_per_decade,
           d.cache_rho_min,    d.cache_rho_max};
}

hflm_status hflm_model_create(const hflm_model_spec* spec, hflm_model** out)
{
    return guarded([&] {
        need(spec, "spec");
        need(out, "out");
        *out = nullptr;
        *out = new hflm_model{hflm::LevyModel{to_cpp(*spec)}};
    });
}

void hflm_model_destroy(hflm_model* model)
{
    delete model;
}

hflm_status hflm_model_density(const hflm_model* model, double x1, double x2, double* out)
{
    return guarded([&] {
        need(model, "model");
        need(out, "out");
        *out = model->impl.density_at({x1, x2});
    });
}

hflm_status hflm_model_total_mass(const hflm_model* model, double* out)
{
    return guarded([&] {
        need(model, "model");
        need(out, "out");
        *out = model->impl.total_mass();
    });
}

hflm_status hflm_model_check_tail(const hflm_model* model, const double* radii, size_t n,
                                  double tol, int* pass, double* max_violation, double* ratios)
{
    return guarded([&] {
        need(model, "model");
        auto const rep = hflm::verify_tail_domination(model->impl, array(radii, n, "radii"), tol);
        if (pass)
            *pass = rep.pass;
        if (max_violation)
            *max_violation = rep.max_violation;
        if (ratios)
            std::copy(rep.ratio_curve.begin(), rep.ratio_curve.end(), ratios);
    });
}

hflm_status hflm_kernel(const hflm_process* process, double t, double s, double* re, double* im)
{
    return guarded([&] {
        auto const p = to_cpp(process);
        p.validate();
        auto const f = hflm::kernel(p, t, s);
        if (re)
            *re = f.real();
        if (im)
            *im = f.imag();
    });
}

hflm_status hflm_psi(const hflm_model* model, double z1, double z2, const hflm_quad_spec* qs,
                     double* out)
{
    return guarded([&] {
        need(model, "model");
        need(out, "out");
        *out = hflm::psi(model->impl, {z1, z2}, to_cpp(qs));
    });
}

hflm_status hflm_psi_bruteforce(const hflm_model* model, double z1, double z2, double* value,
                                double* error)
{
    return guarded([&] {
        need(model, "model");
        auto const e = hflm::psi_bruteforce(model->impl, {z1, z2});
        if (value)
            *value = e.value;
        if (error)
            *error = e.error;
    });
}

hflm_status hflm_engine_create(const hflm_model* model, const hflm_quad_spec* qs,
                               hflm_engine** out)
{
    return guarded([&] {
        need(model, "model");
        need(out, "out");
        *out = nullptr;
        *out = new hflm_engine{hflm::ChfEngine{model->impl, to_cpp(qs)}};
    });
}

void hflm_engine_destroy(hflm_engine* engine)
{
    delete engine;
}

hflm_status hflm_engine_psi(const hflm_engine* engine, double z1, double z2, double* out)
{
    return guarded([&] {
        need(engine, "engine");
        need(out, "out");
        *out = engine->impl.exponent()(hflm::Vec2{z1, z2});
    });
}

hflm_status hflm_log_chf(const hflm_engine* engine, const hflm_process* process,
                         const hflm_probe* probe, double eps, double rescale_index,
                         int raw_coordinates, double* value, double* error)
{
    return guarded([&] {
        need(engine, "engine");
        need(value, "value");
        hflm::ChfOptions opts;
        opts.rescale_index = rescale_index;
        opts.raw_coordinates = raw_coordinates != 0;
        auto const e = engine->impl.log_chf_fdd(to_cpp(process), to_cpp(probe), eps, opts);
        *value = e.value;
        if (error)
            *error = e.error;
    });
}

hflm_status hflm_stable_constants(double alpha, double* kappa, double* c1)
{
    return guarded([&] {
        auto const& c = hflm::stable_constants(alpha);
        if (kappa)
            *kappa = c.kappa;
        if (c1)
            *c1 = c.c1;
    });
}

hflm_status hflm_stable_constants_quadrature(double alpha, double* kappa, double* c1)
{
    return guarded([&] {
        if (kappa)
            *kappa = hflm::kappa_quadrature(alpha);
        if (c1)
            *c1 = hflm::c1_quadrature(alpha);
    });
}

hflm_status hflm_scale_integral(const hflm_process* process, const hflm_probe* probe,
                                double* value, double* error)
{
    return guarded([&] {
        need(value, "value");
        auto const e = hflm::scale_integral(to_cpp(process), to_cpp(probe));
        *value = e.value;
        if (error)
            *error = e.error;
    });
}

hflm_status hflm_log_chf_limit(const hflm_process* process, const hflm_probe* probe,
                               double c0_tail, double* out)
{
    return guarded([&] {
        need(out, "out");
        *out = hflm::log_chf_limit(to_cpp(process), to_cpp(probe), c0_tail);
    });
}

hflm_status hflm_existence(const hflm_model* model, const hflm_process* process,
                           hflm_existence_result* out)
{
    return guarded([&] {
        need(model, "model");
        need(out, "out");
        auto const r = hflm::hflm_existence(model->impl, to_cpp(process));
        *out = {r.exists,          r.outer_exponent,   r.inner_exponent,
                r.cond_a_value,    r.cond_b_value,     r.cond_b_vacuous,
                r.shortcut.exists, r.shortcut.sufficient_only};
    });
}

hflm_status hflm_lemma_verdict(const hflm_lemma_query* query, hflm_lemma_result* out)
{
    return guarded([&] {
        need(out, "out");
        auto const v = hflm::lemma_verdict(to_cpp(query));
        *out = {v.exists,       v.sufficient_only, v.gamma_ok, v.tail_moment,
                v.small_moment, v.cond_a,          v.cond_b};
    });
}

hflm_status hflm_lemma_saturation(const hflm_lemma_query* query, double threshold,
                                  int* saturated, double* estimates, double* rel_changes)
{
    return guarded([&] {
        auto const r = hflm::rr_saturation(to_cpp(query), {}, threshold);
        if (saturated)
            *saturated = r.saturated;
        for (int k = 0; k < 4 && estimates; ++k)
            estimates[k] = r.estimates[k].total;
        for (int k = 0; k < 3 && rel_changes; ++k)
            rel_changes[k] = r.rel_changes[k];
    });
}

hflm_status hflm_lass(const hflm_engine* engine, const hflm_process* process,
                      const hflm_probe* probe, const double* eps, size_t n_eps, double target_rel,
                      hflm_lass_summary* summary, double* a_eps, double* a_err, double* rel_err)
{
    return guarded([&] {
        need(engine, "engine");
        auto const r = hflm::lass_report(engine->impl, to_cpp(process), to_cpp(probe),
                                         array(eps, n_eps, "eps"), target_rel);
        if (summary)
            *summary = {r.a_limit, r.slope, r.spearman, r.rel_err.back(), r.pass};
        for (std::size_t k = 0; k < n_eps; ++k)
        {
            if (a_eps)
                a_eps[k] = r.a_eps[k];
            if (a_err)
                a_err[k] = r.a_eps_error[k];
            if (rel_err)
                rel_err[k] = r.rel_err[k];
        }
    });
}

hflm_status hflm_rescaling_check(const hflm_engine* engine, const hflm_process* process,
                                 const hflm_probe* probe, const double* eps, size_t n_eps,
                                 double index, double* slope, double* expected_slope,
                                 int* diverges)
{
    return guarded([&] {
        need(engine, "engine");
        auto const p = to_cpp(process);
        auto const f = to_cpp(probe);
        auto const schedule = array(eps, n_eps, "eps");
        hflm::LassReport ref;
        for (double e : schedule)
            ref.a_eps.push_back(engine->impl.log_chf_fdd(p, f, e).value);
        auto const c = hflm::rescaling_check(engine->impl, p, f, schedule, ref, index);
        if (slope)
            *slope = c.slope;
        if (expected_slope)
            *expected_slope = c.expected_slope;
        if (diverges)
            *diverges = c.diverges;
    });
}

hflm_status hflm_gaussian_tangent(const hflm_engine* engine, const hflm_process* process,
                                  const double* times, size_t n_times, const double* eps,
                                  size_t n_eps, hflm_gaussian_summary* summary, double* sigma)
{
    return guarded([&] {
        need(engine, "engine");
        auto const r = hflm::gaussian_tangent_report(engine->impl, to_cpp(process),
                                                     array(times, n_times, "times"),
                                                     array(eps, n_eps, "eps"));
        if (summary)
            *summary = {r.hurst_gaussian, r.scale, r.residual, r.ratio, r.ratio_expected};
        if (sigma)
            for (auto const& s : r.sigma)
                sigma = std::copy(s.begin(), s.end(), sigma);
    });
}

void hflm_sim_options_default(hflm_sim_options* opts)
{
    if (opts == nullptr)
        return;
    hflm::SimOptions const d;
    *opts = {d.n_paths, d.seed, d.threads};
}

hflm_status hflm_choose_cap(const hflm_model* model, const hflm_process* process,
                            const hflm_probe* probes, size_t n_probes, double tol, double* s_cap,
                            double* bound)
{
    return guarded([&] {
        need(model, "model");
        auto const c = hflm::choose_s_cap(to_cpp(process), to_cpp(probes, n_probes),
                                          hflm::psi_bound(model->impl), tol);
        if (s_cap)
            *s_cap = c.s_cap;
        if (bound)
            *bound = c.bound;
    });
}

hflm_status hflm_simulate_hflm(const hflm_model* model, const hflm_process* process,
                               const double* times, size_t n_times, double s_cap,
                               const hflm_probe* probes, size_t n_probes, double tol,
                               const hflm_sim_options* opts, hflm_ensemble** out)
{
    return guarded([&] {
        need(model, "model");
        need(out, "out");
        *out = nullptr;
        auto ens = hflm::sample_hflm(model->impl, to_cpp(process), array(times, n_times, "times"),
                                     s_cap, to_cpp(probes, n_probes), tol, to_cpp(opts));
        *out = new hflm_ensemble{std::move(ens)};
    });
}

hflm_status hflm_simulate_hfsm(const hflm_process* process, const double* times, size_t n_times,
                               double s_cap, double c0_tail, const hflm_sim_options* opts,
                               hflm_ensemble** out)
{
    return guarded([&] {
        need(out, "out");
        *out = nullptr;
        auto const p = to_cpp(process);
        auto const t = array(times, n_times, "times");
        auto const grid = hflm::hfsm_spectral_grid(p, t, s_cap);
        *out = new hflm_ensemble{hflm::sample_hfsm(p, t, grid, c0_tail, to_cpp(opts))};
    });
}

hflm_status hflm_simulate_fbm(double hurst, const double* times, size_t n_times,
                              const hflm_sim_options* opts, hflm_ensemble** out)
{
    return guarded([&] {
        need(out, "out");
        *out = nullptr;
        *out = new hflm_ensemble{
            hflm::sample_fbm(hurst, array(times, n_times, "times"), to_cpp(opts))};
    });
}

void hflm_ensemble_destroy(hflm_ensemble* ens)
{
    delete ens;
}

size_t hflm_ensemble_n_paths(const hflm_ensemble* ens)
{
    return ens ? ens->impl.n_paths : 0;
}

size_t hflm_ensemble_n_times(const hflm_ensemble* ens)
{
    return ens ? ens->impl.times.size() : 0;
}

hflm_status hflm_ensemble_value(const hflm_ensemble* ens, size_t path, size_t time, double* re,
                                double* im)
{
    return guarded([&] {
        need(ens, "ensemble");
        hflm::require(path < ens->impl.n_paths && time < ens->impl.times.size(),
                      "ensemble index out of range");
        auto const x = ens->impl.at(path, time);
        if (re)
            *re = x.real();
        if (im)
            *im = x.imag();
    });
}

hflm_status hflm_ensemble_set_meta(hflm_ensemble* ens, const char* key, const char* value)
{
    return guarded([&] {
        need(ens, "ensemble");
        need(key, "key");
        need(value, "value");
        ens->impl.metadata[key] = value;
    });
}

hflm_status hflm_ensemble_write_csv(const hflm_ensemble* ens, const char* path,
                                    const char* const* header, size_t n_header)
{
    return guarded([&] {
        need(ens, "ensemble");
        need(path, "path");
        std::vector<std::string> lines;
        for (std::size_t k = 0; k < n_header; ++k)
            lines.emplace_back(header[k]);
        std::ofstream out(path, std::ios::binary);
        hflm::require(static_cast<bool>(out), std::string("cannot open ") + path);
        hflm::write_ensemble_csv(ens->impl, out, lines);
        hflm::require(static_cast<bool>(out), std::string("write failed: ") + path);
    });
}

hflm_status hflm_ensemble_write_metadata(const hflm_ensemble* ens, const char* path)
{
    return guarded([&] {
        need(ens, "ensemble");
        need(path, "path");
        std::ofstream out(path, std::ios::binary);
        hflm::require(static_cast<bool>(out), std::string("cannot open ") + path);
        hflm::write_ensemble_metadata(ens->impl, out);
        hflm::require(static_cast<bool>(out), std::string("write failed: ") + path);
    });
}

hflm_status hflm_empirical_log_chf(const hflm_ensemble* ens, const hflm_probe* probe,
                                   double* estimate, double* std_error)
{
    return guarded([&] {
        need(ens, "ensemble");
        auto const e = hflm::empirical_log_chf(ens->impl, to_cpp(probe));
        if (estimate)
            *estimate = e.estimate;
        if (std_error)
            *std_error = e.std_error;
    });
}

hflm_status hflm_probe_samples(const hflm_ensemble* ens, const hflm_probe* probe, double* out)
{
    return guarded([&] {
        need(ens, "ensemble");
        need(out, "out");
        auto const y = hflm::probe_samples(ens->impl, to_cpp(probe));
        std::copy(y.begin(), y.end(), out);
    });
}

hflm_status hflm_ks_two_sample(const double* a, size_t na, const double* b, size_t nb,
                               double* statistic, double* p_value)
{
    return guarded([&] {
        auto const r = hflm::ks_two_sample(array(a, na, "a"), array(b, nb, "b"));
        if (statistic)
            *statistic = r.statistic;
        if (p_value)
            *p_value = r.p_value;
    });
}

}  // extern "C"
