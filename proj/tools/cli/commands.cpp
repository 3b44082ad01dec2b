// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "svg_plot.hpp"

namespace hflm_cli {
namespace {

namespace fs = std::filesystem;

void check(hflm_status st)
{
    if (st != HFLM_OK)
        throw LibraryError(st, std::string(hflm_status_name(st)) + ": " + hflm_last_error());
}

struct ModelDeleter
{
    void operator()(hflm_model* m) const { hflm_model_destroy(m); }
};
struct EngineDeleter
{
    void operator()(hflm_engine* e) const { hflm_engine_destroy(e); }
};
struct EnsembleDeleter
{
    void operator()(hflm_ensemble* e) const { hflm_ensemble_destroy(e); }
};
using Model = std::unique_ptr<hflm_model, ModelDeleter>;
using Engine = std::unique_ptr<hflm_engine, EngineDeleter>;
using Ensemble = std::unique_ptr<hflm_ensemble, EnsembleDeleter>;

Model make_model(hflm_model_spec const& spec)
{
    hflm_model* m = nullptr;
    check(hflm_model_create(&spec, &m));
    return Model(m);
}

Engine make_engine(hflm_model const* model, hflm_quad_spec const& qs)
{
    hflm_engine* e = nullptr;
    check(hflm_engine_create(model, &qs, &e));
    return Engine(e);
}

std::string num(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string short_num(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string csv_field(std::string const& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
        out += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

// RFC-4180 table (CRLF) preceded by "# key=value" provenance comments.
class CsvTable
{
  public:
    explicit CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

    void write(fs::path const& path, std::string const& hash) const
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw LibraryError(HFLM_ERR_INVALID, "cannot write " + path.string());
        out << "# config_hash=" << hash << "\r\n# version=" << hflm_version() << "\r\n";
        emit(out, columns_);
        for (auto const& r : rows_)
            emit(out, r);
    }

  private:
    static void emit(std::ostream& out, std::vector<std::string> const& cells)
    {
        for (std::size_t k = 0; k < cells.size(); ++k)
            out << (k ? "," : "") << csv_field(cells[k]);
        out << "\r\n";
    }

    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

struct Context
{
    RunConfig const& cfg;
    std::string hash;
    fs::path out;
    std::ostream& log;

    void write_svg(std::string const& name, PlotSpec const& spec,
                   std::vector<Series> const& series) const
    {
        if (!cfg.plots)
            return;
        std::ofstream f(out / name, std::ios::binary);
        f << render_svg(spec, series);
        log << "wrote " << (out / name).string() << '\n';
    }

    void write_csv(std::string const& name, CsvTable const& t) const
    {
        t.write(out / name, hash);
        log << "wrote " << (out / name).string() << '\n';
    }
};

std::string yes(bool b)
{
    return b ? "true" : "false";
}

bool heavy(RunConfig const& cfg)
{
    return cfg.model.kind != HFLM_COMPACT_SUPPORT;
}

std::vector<double> tail_radii()
{
    std::vector<double> r;
    for (int k = -2; k <= 6; ++k)
        r.push_back(std::pow(10.0, k));
    return r;
}

// ---- exists ----

int cmd_exists(Context const& ctx)
{
    auto const& cfg = ctx.cfg;
    auto const model = make_model(cfg.model);
    hflm_existence_result r{};
    check(hflm_existence(model.get(), &cfg.process, &r));

    bool const a_ok = std::isfinite(r.cond_a_value);
    bool const b_ok = r.cond_b_vacuous || std::isfinite(r.cond_b_value);
    CsvTable t({"check", "quantity", "value", "holds"});
    t.row({"theorem", "outer_exponent", num(r.outer_exponent), ""});
    t.row({"theorem", "condition_a", num(r.cond_a_value), yes(a_ok)});
    t.row({"theorem", "inner_exponent", num(r.inner_exponent), ""});
    t.row({"theorem", "condition_b", r.cond_b_vacuous ? "vacuous" : num(r.cond_b_value),
           yes(b_ok)});
    t.row({"theorem", "exists", "", yes(r.exists)});
    t.row({"lemma", "exists", "", yes(r.shortcut_exists)});
    t.row({"lemma", "sufficient_only", "", yes(r.shortcut_sufficient_only)});

    ctx.log << "model " << cfg.model_kind << ", alpha=" << cfg.process.alpha
            << ", H=" << cfg.process.hurst << '\n';
    ctx.log << "condition (a): moment of order " << short_num(r.outer_exponent) << " = "
            << short_num(r.cond_a_value) << (a_ok ? "  holds" : "  fails") << '\n';
    if (r.cond_b_vacuous)
        ctx.log << "condition (b): vacuous (H + 1/alpha <= 1)  holds\n";
    else
        ctx.log << "condition (b): moment of order " << short_num(r.inner_exponent) << " = "
                << short_num(r.cond_b_value) << (b_ok ? "  holds" : "  fails") << '\n';
    ctx.log << "lemma shortcut: " << (r.shortcut_exists ? "exists" : "not shown")
            << (r.shortcut_sufficient_only ? " (sufficient only)" : "") << '\n';

    if (heavy(cfg))
    {
        auto const radii = tail_radii();
        int pass = 0;
        double viol = 0.0;
        std::vector<double> ratios(radii.size());
        check(hflm_model_check_tail(model.get(), radii.data(), radii.size(), 1e-3, &pass, &viol,
                                    ratios.data()));
        t.row({"tail_assumption", "max_violation", num(viol), yes(pass)});
        t.row({"tail_assumption", "ratio_at_1e6", num(ratios.back()), yes(pass)});
        ctx.log << "tail domination: " << (pass ? "holds" : "fails") << '\n';
    }
    ctx.log << "exists=" << yes(r.exists) << '\n';
    ctx.write_csv("exists.csv", t);
    return kExitOk;
}

// ---- chf ----

int cmd_chf(Context const& ctx)
{
    auto const& cfg = ctx.cfg;
    auto const model = make_model(cfg.model);
    auto const engine = make_engine(model.get(), cfg.quad);
    CsvTable t({"probe", "eps", "A_eps", "error"});
    double const nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t k = 0; k < cfg.probes.size(); ++k)
    {
        auto const probe = cfg.probes[k].view();
        for (double e : cfg.eps)
        {
            double v = 0.0, err = 0.0;
            check(hflm_log_chf(engine.get(), &cfg.process, &probe, e, nan, 0, &v, &err));
            t.row({std::to_string(k), num(e), num(v), num(err)});
            ctx.log << "probe " << k << "  eps=" << short_num(e) << "  A=" << short_num(v)
                    << "  (+-" << short_num(err) << ")\n";
        }
    }
    ctx.write_csv("chf.csv", t);
    return kExitOk;
}

// ---- limit ----

int cmd_limit(Context const& ctx)
{
    auto const& cfg = ctx.cfg;
    double const a = cfg.process.alpha;
    double kap = 0, c1 = 0, kq = 0, cq = 0;
    check(hflm_stable_constants(a, &kap, &c1));
    check(hflm_stable_constants_quadrature(a, &kq, &cq));
    CsvTable c({"alpha", "kappa", "c1", "kappa_quadrature", "c1_quadrature"});
    c.row({num(a), num(kap), num(c1), num(kq), num(cq)});
    ctx.log << "alpha=" << a << "  kappa=" << num(kap) << "  c1=" << num(c1) << '\n';
    ctx.write_csv("constants.csv", c);

    CsvTable t({"probe", "scale_integral", "scale_error", "c0_tail", "A_limit"});
    for (std::size_t k = 0; k < cfg.probes.size(); ++k)
    {
        auto const probe = cfg.probes[k].view();
        double s = 0, se = 0, lim = 0;
        check(hflm_scale_integral(&cfg.process, &probe, &s, &se));
        check(hflm_log_chf_limit(&cfg.process, &probe, cfg.model.c0_tail, &lim));
        t.row({std::to_string(k), num(s), num(se), num(cfg.model.c0_tail), num(lim)});
        ctx.log << "probe " << k << "  scale=" << short_num(s) << "  A_limit=" << short_num(lim)
                << '\n';
    }
    ctx.write_csv("limit.csv", t);
    return kExitOk;
}

// ---- lass ----

int lass_gaussian(Context const& ctx, hflm_engine const* engine)
{
    auto const& cfg = ctx.cfg;
    auto const& times = cfg.gaussian_times;
    std::size_t const n = times.size();
    hflm_gaussian_summary s{};
    std::vector<double> sigma(cfg.eps.size() * n * n);
    check(hflm_gaussian_tangent(engine, &cfg.process, times.data(), n, cfg.eps.data(),
                                cfg.eps.size(), &s, sigma.data()));
    std::vector<std::string> cols{"eps"};
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j; k < n; ++k)
            cols.push_back("sigma_" + std::to_string(j + 1) + std::to_string(k + 1));
    CsvTable t(cols);
    for (std::size_t e = 0; e < cfg.eps.size(); ++e)
    {
        std::vector<std::string> row{num(cfg.eps[e])};
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = j; k < n; ++k)
                row.push_back(num(sigma[e * n * n + j * n + k]));
        t.row(row);
    }
    ctx.write_csv("gaussian_tangent.csv", t);
    CsvTable sum({"quantity", "value"});
    sum.row({"hurst_gaussian", num(s.hurst_gaussian)});
    sum.row({"scale", num(s.scale)});
    sum.row({"gram_residual", num(s.residual)});
    sum.row({"ratio_12_11", num(s.ratio)});
    sum.row({"ratio_expected", num(s.ratio_expected)});
    ctx.write_csv("gaussian_summary.csv", sum);
    ctx.log << "gaussian tangent: H_G=" << short_num(s.hurst_gaussian) << "  ratio "
            << short_num(s.ratio) << " vs " << short_num(s.ratio_expected) << "  residual "
            << short_num(s.residual) << '\n';
    return kExitOk;
}

int cmd_lass(Context const& ctx)
{
    auto const& cfg = ctx.cfg;
    auto const model = make_model(cfg.model);
    auto const engine = make_engine(model.get(), cfg.quad);
    if (!heavy(cfg))
        return lass_gaussian(ctx, engine.get());

    std::size_t const n = cfg.eps.size();
    CsvTable t({"probe", "eps", "A_eps", "A_limit", "abs_err", "rel_err"});
    CsvTable sum({"probe", "quantity", "value"});
    std::vector<Series> series;
    for (std::size_t k = 0; k < cfg.probes.size(); ++k)
    {
        auto const probe = cfg.probes[k].view();
        hflm_lass_summary s{};
        std::vector<double> a(n), rel(n);
        check(hflm_lass(engine.get(), &cfg.process, &probe, cfg.eps.data(), n, cfg.target_rel,
                        &s, a.data(), nullptr, rel.data()));
        auto const p = std::to_string(k);
        for (std::size_t j = 0; j < n; ++j)
            t.row({p, num(cfg.eps[j]), num(a[j]), num(s.a_limit), num(std::abs(a[j] - s.a_limit)),
                   num(rel[j])});
        sum.row({p, "spearman", num(s.spearman)});
        sum.row({p, "loglog_slope", num(s.slope)});
        sum.row({p, "final_rel_err", num(s.final_rel_err)});
        sum.row({p, "target_rel", num(cfg.target_rel)});
        sum.row({p, "pass", yes(s.pass)});
        ctx.log << "probe " << k << "  A_limit=" << short_num(s.a_limit) << "  rel_err(final)="
                << short_num(s.final_rel_err) << "  spearman=" << short_num(s.spearman)
                << "  slope=" << short_num(s.slope) << (s.pass ? "  pass" : "  above target")
                << '\n';
        if (cfg.index_offset > 0.0)
            for (double sign : {-1.0, 1.0})
            {
                double const idx = cfg.process.hurst + sign * cfg.index_offset;
                if (!(idx > 0.0 && idx < 1.0))
                    continue;
                double slope = 0, expected = 0;
                int div = 0;
                check(hflm_rescaling_check(engine.get(), &cfg.process, &probe, cfg.eps.data(), n,
                                           idx, &slope, &expected, &div));
                std::string const tag = "index_" + short_num(idx);
                sum.row({p, tag + "_slope", num(slope)});
                sum.row({p, tag + "_expected_slope", num(expected)});
                sum.row({p, tag + "_diverges", yes(div)});
                ctx.log << "  index " << short_num(idx) << ": drift slope " << short_num(slope)
                        << " (expected " << short_num(expected) << ")"
                        << (div ? "  diverges" : "  stabilizes") << '\n';
            }
        series.push_back({"probe " + p, cfg.eps, rel, true});
    }
    ctx.write_csv("lass.csv", t);
    ctx.write_csv("lass_summary.csv", sum);
    ctx.write_svg("lass.svg", {"Relative error of A_eps", "eps", "relative error", true, true},
                  series);
    return kExitOk;
}

// ---- simulate ----

std::vector<hflm_probe> views(std::vector<ProbeConfig> const& probes)
{
    std::vector<hflm_probe> v;
    for (auto const& p : probes)
        v.push_back(p.view());
    return v;
}

double fbm_log_chf(double hurst, ProbeConfig const& p)
{
    double q = 0.0;
    for (std::size_t j = 0; j < p.times.size(); ++j)
        for (std::size_t k = 0; k < p.times.size(); ++k)
        {
            double const s = std::abs(p.times[j]), t = std::abs(p.times[k]);
            double const cov = 0.5
                               * (std::pow(s, 2 * hurst) + std::pow(t, 2 * hurst)
                                  - std::pow(std::abs(p.times[j] - p.times[k]), 2 * hurst));
            q += p.theta1[j] * p.theta1[k] * cov;
        }
    return -0.5 * q;
}

int cmd_simulate(Context const& ctx)
{
    auto const& cfg = ctx.cfg;
    auto const& sim = cfg.sim;
    hflm_sim_options opts{static_cast<size_t>(sim.n_paths), sim.seed, sim.threads};
    auto const probes = views(cfg.probes);
    double const nan = std::numeric_limits<double>::quiet_NaN();

    Model model;
    Engine engine;
    hflm_ensemble* raw = nullptr;
    double s_cap = sim.s_cap;
    std::function<double(std::size_t)> reference;
    if (sim.process == "hflm")
    {
        model = make_model(cfg.model);
        double bound = 0.0;
        if (s_cap <= 0.0)
            check(hflm_choose_cap(model.get(), &cfg.process, probes.data(), probes.size(),
                                  sim.tol, &s_cap, &bound));
        check(hflm_simulate_hflm(model.get(), &cfg.process, sim.times.data(), sim.times.size(),
                                 s_cap, probes.data(), probes.size(), sim.tol, &opts, &raw));
        engine = make_engine(model.get(), cfg.quad);
        reference = [&](std::size_t k) {
            double v = 0.0;
            check(hflm_log_chf(engine.get(), &cfg.process, &probes[k], 1.0, nan, 0, &v, nullptr));
            return v;
        };
    }
    else if (sim.process == "hfsm")
    {
        if (s_cap <= 0.0)
            s_cap = 1000.0;
        check(hflm_simulate_hfsm(&cfg.process, sim.times.data(), sim.times.size(), s_cap,
                                 cfg.model.c0_tail, &opts, &raw));
        reference = [&](std::size_t k) {
            double v = 0.0;
            check(hflm_log_chf_limit(&cfg.process, &probes[k], cfg.model.c0_tail, &v));
            return v;
        };
    }
    else
    {
        check(hflm_simulate_fbm(cfg.process.hurst, sim.times.data(), sim.times.size(), &opts,
                                &raw));
        reference = [&](std::size_t k) { return fbm_log_chf(cfg.process.hurst, cfg.probes[k]); };
    }
    Ensemble const ens(raw);
    check(hflm_ensemble_set_meta(ens.get(), "config_hash", ctx.hash.c_str()));
    check(hflm_ensemble_set_meta(ens.get(), "version", hflm_version()));
    if (s_cap > 0.0 && sim.process != "fbm")
        check(hflm_ensemble_set_meta(ens.get(), "s_cap", num(s_cap).c_str()));

    ctx.log << sim.process << ": " << sim.n_paths << " paths on " << sim.times.size()
            << " times, seed " << sim.seed;
    if (sim.process != "fbm")
        ctx.log << ", s_cap " << short_num(s_cap);
    ctx.log << '\n';

    if (sim.write_paths)
    {
        std::string const h1 = "config_hash=" + ctx.hash;
        std::string const h2 = std::string("version=") + hflm_version();
        char const* header[] = {h1.c_str(), h2.c_str()};
        check(hflm_ensemble_write_csv(ens.get(), (ctx.out / "paths.csv").string().c_str(), header,
                                      2));
        check(hflm_ensemble_write_metadata(ens.get(), (ctx.out / "paths.meta").string().c_str()));
        ctx.log << "wrote " << (ctx.out / "paths.csv").string() << '\n';
    }

    CsvTable t({"probe", "empirical", "std_error", "reference", "z"});
    for (std::size_t k = 0; k < probes.size(); ++k)
    {
        double est = 0, se = 0;
        check(hflm_empirical_log_chf(ens.get(), &probes[k], &est, &se));
        double const ref = reference(k);
        double const z = (est - ref) / se;
        t.row({std::to_string(k), num(est), num(se), num(ref), num(z)});
        ctx.log << "probe " << k << "  empirical " << short_num(est) << " +- " << short_num(se)
                << "  reference " << short_num(ref) << "  z=" << short_num(z) << '\n';
    }
    ctx.write_csv("comparison.csv", t);

    std::vector<Series> series;
    std::size_t const shown = std::min<std::size_t>(8, hflm_ensemble_n_paths(ens.get()));
    for (std::size_t i = 0; i < shown; ++i)
    {
        Series s{"path " + std::to_string(i), sim.times, {}, false};
        for (std::size_t j = 0; j < sim.times.size(); ++j)
        {
            double re = 0, im = 0;
            check(hflm_ensemble_value(ens.get(), i, j, &re, &im));
            s.y.push_back(re);
        }
        series.push_back(std::move(s));
    }
    ctx.write_svg("paths.svg", {"Sample paths (real part)", "t", "Re X_t", false, false}, series);
    return kExitOk;
}

// ---- validate ----

struct CheckRow
{
    std::string name;
    double value;
    double tolerance;
    bool pass;
};

int cmd_validate(Context const& ctx)
{
    auto const& cfg = ctx.cfg;
    std::vector<CheckRow> rows;
    auto add = [&](std::string name, double value, double tol) {
        rows.push_back({std::move(name), value, tol, value <= tol});
    };
    double const nan = std::numeric_limits<double>::quiet_NaN();
    double const pi = std::numbers::pi;

    // Kernel scaling f_{eps t}(s) = eps^(H + 1/alpha) f_t(eps s).
    {
        std::mt19937_64 gen(20260101);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        double worst = 0.0;
        for (int k = 0; k < 1000; ++k)
        {
            hflm_process p{0.2 + 1.7 * u(gen), 0.05 + 0.9 * u(gen), 1.0, 0.5};
            double const t = -5.0 + 10.0 * u(gen);
            double s = -10.0 + 20.0 * u(gen);
            if (s == 0.0)
                s = 1.0;
            double const e = std::pow(10.0, -3.0 + 4.0 * u(gen));
            double lr = 0, li = 0, rr = 0, ri = 0;
            check(hflm_kernel(&p, e * t, s, &lr, &li));
            check(hflm_kernel(&p, t, e * s, &rr, &ri));
            double const f = std::pow(e, p.hurst + 1.0 / p.alpha);
            double const d = std::hypot(lr - f * rr, li - f * ri);
            double const m = std::hypot(lr, li);
            if (m > 0.0)
                worst = std::max(worst, d / m);
        }
        add("kernel_scaling", worst, 1e-12);
    }

    // Stable constants.
    {
        double k1 = 0, c1 = 0;
        check(hflm_stable_constants(1.0, &k1, &c1));
        add("kappa_at_1", std::abs(k1 - pi / 2), 1e-8);
        add("c1_at_1", std::abs(c1 - 4.0), 1e-8);
        double worst = 0.0;
        for (double a : {0.5, 1.3, 1.7})
        {
            double k = 0, c = 0, kq = 0, cq = 0;
            check(hflm_stable_constants(a, &k, &c));
            check(hflm_stable_constants_quadrature(a, &kq, &cq));
            worst = std::max({worst, std::abs(kq / k - 1.0), std::abs(cq / c - 1.0)});
        }
        add("constants_closed_vs_quadrature", worst, 1e-8);
    }

    // psi of the configured model.
    auto const model = make_model(cfg.model);
    auto const engine = make_engine(model.get(), cfg.quad);
    {
        double z0 = 0.0;
        check(hflm_engine_psi(engine.get(), 0.0, 0.0, &z0));
        add("psi_at_origin", std::abs(z0), 0.0);
        double maxval = -std::numeric_limits<double>::infinity(), radial = 0.0;
        for (double r : {1e-3, 0.1, 1.0, 10.0, 100.0})
        {
            double a = 0, b = 0;
            check(hflm_engine_psi(engine.get(), r, 0.0, &a));
            check(hflm_engine_psi(engine.get(), r * std::cos(0.7), r * std::sin(0.7), &b));
            maxval = std::max(maxval, a);
            radial = std::max(radial, std::abs(a - b) / std::abs(a));
        }
        add("psi_nonpositive", std::max(0.0, maxval), 0.0);
        add("psi_radial", radial, 1e-10);
    }

    // Rotating every (theta1, theta2) by a common angle leaves A_eps unchanged.
    {
        auto const& p = cfg.probes.front();
        ProbeConfig rot = p;
        double const c = std::cos(1.1), s = std::sin(1.1);
        for (std::size_t j = 0; j < p.times.size(); ++j)
        {
            rot.theta1[j] = c * p.theta1[j] - s * p.theta2[j];
            rot.theta2[j] = s * p.theta1[j] + c * p.theta2[j];
        }
        auto const v0 = p.view();
        auto const v1 = rot.view();
        double a = 0, b = 0, ea = 0;
        check(hflm_log_chf(engine.get(), &cfg.process, &v0, 1.0, nan, 0, &a, &ea));
        check(hflm_log_chf(engine.get(), &cfg.process, &v1, 1.0, nan, 0, &b, nullptr));
        add("chf_rotation_invariance", std::abs(a - b), std::max(1e-8, 2.0 * ea));
    }

    // Scale integral homogeneity under t -> 2t.
    {
        auto const& p = cfg.probes.front();
        ProbeConfig twice = p;
        for (double& t : twice.times)
            t *= 2.0;
        auto const v0 = p.view();
        auto const v1 = twice.view();
        double a = 0, b = 0;
        check(hflm_scale_integral(&cfg.process, &v0, &a, nullptr));
        check(hflm_scale_integral(&cfg.process, &v1, &b, nullptr));
        double const f = std::pow(2.0, cfg.process.alpha * cfg.process.hurst);
        add("scale_integral_homogeneity", std::abs(b / (f * a) - 1.0), 1e-6);
    }

    // Pure-stable driver: A_eps equals its limit at every eps.
    {
        hflm_model_spec ps = cfg.model;
        ps.kind = HFLM_PURE_STABLE;
        ps.alpha = cfg.process.alpha;
        ps.c_bound = 0.0;
        auto const m = make_model(ps);
        auto const e = make_engine(m.get(), cfg.quad);
        auto const v = cfg.probes.front().view();
        double lim = 0.0, worst = 0.0;
        check(hflm_log_chf_limit(&cfg.process, &v, ps.c0_tail, &lim));
        for (double eps : {1.0, 0.0625})
        {
            double a = 0;
            check(hflm_log_chf(e.get(), &cfg.process, &v, eps, nan, 0, &a, nullptr));
            worst = std::max(worst, std::abs(a / lim - 1.0));
        }
        add("stable_self_similarity", worst, 1e-3);
    }

    // One-dimensional lemma against the truncated-integral oracle.
    {
        double mismatches = 0.0;
        hflm_lemma_query const cells[] = {
            {-0.2, 0.8, 1.0, 0.5, 2.0, 0},  // both moments finite
            {-0.2, 0.8, 1.0, 0.5, 1.1, 0},  // tail moment diverges
            {-0.6, 0.8, 1.0, 1.8, 2.0, 0},  // small-jump moment diverges
        };
        for (auto const& q : cells)
        {
            hflm_lemma_result v{};
            int sat = 0;
            check(hflm_lemma_verdict(&q, &v));
            check(hflm_lemma_saturation(&q, 0.01, &sat, nullptr, nullptr));
            mismatches += (v.exists != sat);
        }
        add("lemma_vs_oracle_mismatches", mismatches, 0.0);
    }

    CsvTable t({"check", "value", "tolerance", "pass"});
    bool all = true;
    for (auto const& r : rows)
    {
        all = all && r.pass;
        t.row({r.name, num(r.value), num(r.tolerance), yes(r.pass)});
        ctx.log << (r.pass ? "PASS " : "FAIL ") << r.name << "  " << short_num(r.value)
                << " (tol " << short_num(r.tolerance) << ")\n";
    }
    ctx.write_csv("validate.csv", t);
    ctx.log << (all ? "all checks passed" : "some checks failed") << '\n';
    return all ? kExitOk : kExitValidationFailed;
}

}  // namespace

int run_command(std::string const& name, RunConfig const& cfg, std::ostream& log)
{
    static std::map<std::string, int (*)(Context const&)> const table{
        {"exists", cmd_exists}, {"chf", cmd_chf},           {"limit", cmd_limit},
        {"lass", cmd_lass},     {"simulate", cmd_simulate}, {"validate", cmd_validate},
    };
    auto const it = table.find(name);
    if (it == table.end())
        throw ConfigError("unknown subcommand '" + name + "'");
    if (cfg.probes.empty())
        throw ConfigError("config must define at least one [[probe]]");

    Context ctx{cfg, config_hash(cfg), fs::path(cfg.out_dir), log};
    fs::create_directories(ctx.out);
    {
        std::ofstream f(ctx.out / "config.toml", std::ios::binary);
        f << "# config_hash=" << ctx.hash << "\n# version=" << hflm_version() << "\n"
          << serialize(cfg);
    }
    return it->second(ctx);
}

}  // namespace hflm_cli
