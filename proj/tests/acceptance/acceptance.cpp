// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one PASS/FAIL line per criterion, with the measured
// quantity next to its tolerance.
//
//   hflm_acceptance [--only N]... [--expect-fail N]...
//
// The exit status is 0 when the set of failing criteria equals the set given
// with --expect-fail (empty by default).
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "chf_engine.hpp"
#include "existence.hpp"
#include "lass.hpp"
#include "simulate.hpp"
#include "stable_limit.hpp"

using namespace hflm;

namespace {

struct Check
{
    std::string what;
    bool pass;
};

struct Outcome
{
    std::vector<Check> checks;

    void add(bool pass, char const* fmt, ...) __attribute__((format(printf, 3, 4)))
    {
        char buf[512];
        va_list ap;
        va_start(ap, fmt);
        std::vsnprintf(buf, sizeof buf, fmt, ap);
        va_end(ap);
        checks.push_back({buf, pass});
    }

    bool pass() const
    {
        for (auto const& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
};

LevyModel model(ModelKind kind, double alpha)
{
    ModelSpec s;
    s.kind = kind;
    s.alpha = alpha;
    return LevyModel{s};
}

FddSpec rotate(FddSpec f, double angle)
{
    double const c = std::cos(angle), s = std::sin(angle);
    for (std::size_t j = 0; j < f.size(); ++j)
    {
        double const a = f.theta1[j], b = f.theta2[j];
        f.theta1[j] = c * a - s * b;
        f.theta2[j] = s * a + c * b;
    }
    return f;
}

// 1. Pure-stable driver: A_eps equals the limit for every eps.
Outcome stable_self_similarity()
{
    Outcome o;
    double worst = 0.0;
    auto const f = FddSpec::single(1.0, 1.0, 0.0);
    for (double alpha : {0.8, 1.2, 1.5})
    {
        ChfEngine const e(model(ModelKind::pure_stable, alpha));
        for (double h : {0.3, 0.7})
        {
            ProcessParams const p{alpha, h, 1.0, 0.0};
            double const lim = log_chf_limit(p, f, 1.0);
            for (double eps : {1.0, 0.25, 0.0625, 0.015625})
                worst = std::max(worst, std::abs(e.log_chf_fdd(p, f, eps).value - lim) / std::abs(lim));
        }
    }
    o.add(worst < 1e-3, "max relative error %.2e over 24 cases (tol 1e-3)", worst);
    return o;
}

// 2. Smoothed-Pareto driver: convergence to the stable limit.
Outcome smoothed_pareto_convergence()
{
    Outcome o;
    ChfEngine const e(model(ModelKind::smoothed_pareto, 1.2));
    ProcessParams const p{1.2, 0.7, 1.0, 0.0};
    auto const f = FddSpec::single(1.0, 1.0, 0.0);
    std::vector<double> eps;
    for (int k = 0; k <= 10; ++k)
        eps.push_back(std::ldexp(1.0, -k));
    auto const r = lass_report(e, p, f, eps, 0.05);
    o.add(r.spearman > 0.9, "spearman(err, eps) = %.3f (need > 0.9)", r.spearman);
    o.add(r.pass, "relative error at eps=2^-10 = %.4f (need < 0.05); log-log slope %.3f",
          r.rel_err.back(), r.slope);
    for (double idx : {0.6, 0.8})
    {
        auto const c = rescaling_check(e, p, f, eps, r, idx);
        o.add(c.diverges, "index %.1f: drift slope %.4f vs %.4f expected (diverges: %s)", idx,
              c.slope, c.expected_slope, c.diverges ? "yes" : "no");
    }
    return o;
}

// 3. Stable constants.
Outcome constants()
{
    Outcome o;
    double const dk = std::abs(kappa(1.0) - std::numbers::pi / 2);
    double const dc = std::abs(c1(1.0) - 4.0);
    o.add(dk < 1e-8 && dc < 1e-8, "kappa(1) off by %.1e, c1(1) off by %.1e (tol 1e-8)", dk, dc);
    std::mt19937_64 gen(2026);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    double worst = 0.0, worst_alpha = 0.0;
    for (int k = 0; k < 10;)
    {
        double const a = u(gen);
        if (a == 0.0 || a == 1.0)
            continue;
        ++k;
        double const d = std::max(std::abs(kappa_quadrature(a) / kappa(a) - 1.0),
                                  std::abs(c1_quadrature(a) / c1(a) - 1.0));
        if (d > worst)
            worst = d, worst_alpha = a;
    }
    o.add(worst < 1e-8, "closed form vs quadrature on 10 random alpha: max rel diff %.1e at alpha=%.4f (tol 1e-8)",
          worst, worst_alpha);
    return o;
}

// 4. psi engine against closed form and lattice sums.
Outcome psi_engine()
{
    Outcome o;
    {
        ChfEngine const e(model(ModelKind::pure_stable, 1.3));
        double worst = 0.0;
        for (double rho : {1e-3, 0.1, 1.0, 10.0, 1e3})
            worst = std::max(worst, std::abs(e.exponent()(rho) / stable_exponent(1.3, 1.0, rho) - 1.0));
        o.add(worst < 1e-4, "pure-stable psi vs closed form: max rel err %.1e (tol 1e-4)", worst);
    }
    auto const m = model(ModelKind::smoothed_pareto, 1.2);
    ChfEngine const e(m);
    std::mt19937_64 gen(44);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int ok = 0;
    double worst_ratio = 0.0;
    for (int k = 0; k < 20; ++k)
    {
        double const r = std::pow(10.0, -2.0 + 3.0 * u(gen));
        double const a = 2.0 * std::numbers::pi * u(gen);
        Vec2 const z{r * std::cos(a), r * std::sin(a)};
        auto const bf = psi_bruteforce(m, z);
        double const v = e.exponent()(z);
        // Combined tolerance: lattice error bar plus the engine's cache tolerance.
        double const tol = 3.0 * bf.error + 1e-5 * std::abs(v);
        double const d = std::abs(bf.value - v);
        ok += d <= tol;
        worst_ratio = std::max(worst_ratio, d / tol);
    }
    o.add(ok == 20, "smoothed-pareto psi vs lattice sum: %d/20 within combined tolerance (worst %.2f of budget)",
          ok, worst_ratio);
    double maxval = -1.0, radial = 0.0;
    for (double r : {1e-8, 1e-4, 0.1, 1.0, 10.0, 1e4})
    {
        double const v = e.exponent()(r);
        maxval = std::max(maxval, v);
        for (double a : {0.4, 1.9, 3.3, 5.5})
            radial = std::max(radial, std::abs(e.exponent()(Vec2{r * std::cos(a), r * std::sin(a)}) - v) / std::abs(v));
    }
    double const zero = e.exponent()(Vec2{0.0, 0.0});
    o.add(zero == 0.0 && maxval <= 0.0 && radial <= 1e-10,
          "psi(0) = %g, max psi = %.3g, radial deviation %.1e (tol 1e-10)", zero, maxval, radial);
    return o;
}

// 5. Existence.
Outcome existence()
{
    Outcome o;
    double const gt[5][2] = {{0.4, 1.5}, {0.5, 1.5}, {0.6, 1.0}, {0.8, 1.5}, {1.2, 1.8}};
    double const bd[5][2] = {{0, 1.5}, {-0.25, 1.9}, {-0.75, 0.8}, {-0.75, 1.6}, {-1.0, 1.0}};
    int agree = 0, exists = 0;
    for (auto const& a : gt)
        for (auto const& b : bd)
        {
            ExistenceQuery q;
            q.beta = b[0];
            q.gamma = a[0];
            q.nu = {1.0, b[1], a[1]};
            bool const v = lemma_verdict(q).exists;
            agree += v == rr_saturation(q).saturated;
            exists += v;
        }
    o.add(agree == 25, "lemma vs truncated oracle: %d/25 cells agree (%d exist, %d do not)", agree,
          exists, 25 - exists);
    int yes = 0;
    for (double alpha : {0.8, 1.2, 1.5})
        for (double h : {0.2, 0.5, 0.8})
            for (auto kind : {ModelKind::smoothed_pareto, ModelKind::truncated_stable, ModelKind::pure_stable})
                yes += hflm_existence(model(kind, alpha), {alpha, h, 1.0, 0.0}).exists;
    o.add(yes == 27, "tail-dominated models: %d/27 (alpha, H, family) cases exist", yes);
    auto const c = hflm_existence(model(ModelKind::pure_stable, 1.9), {0.8, 0.9, 1.0, 0.0});
    o.add(!c.exists, "counterexample (driver tail 1.9, process alpha 0.8, H 0.9): exists = %s",
          c.exists ? "true" : "false");
    return o;
}

// 6. Monte Carlo against quadrature.
Outcome monte_carlo()
{
    Outcome o;
    auto const m = model(ModelKind::smoothed_pareto, 1.8);
    ProcessParams const p{1.8, 0.9, 1.0, 0.0};
    std::vector<FddSpec> const probes{
        FddSpec::single(1.0, 1.0, 0.0),
        FddSpec::single(2.0, 0.0, 0.8),
        FddSpec::single(0.5, 0.7, 0.7),
        FddSpec{{1.0, 2.0}, {0.5, 0.5}, {0.0, 0.0}},
        FddSpec{{1.0, 2.0}, {-0.6, 0.6}, {0.0, 0.0}},
    };
    auto const cap = choose_s_cap(p, probes, psi_bound(m), 1e-3);
    SimOptions opts;
    opts.n_paths = 100000;
    opts.seed = 20260;
    auto const ens = sample_hflm(m, p, {0.5, 1.0, 2.0}, cap.s_cap, probes, 1e-3, opts);
    ChfEngine const e(m);
    double worst = 0.0;
    for (auto const& f : probes)
    {
        auto const emp = empirical_log_chf(ens, f);
        double const ref = e.log_chf_fdd(p, f, 1.0).value;
        worst = std::max(worst, std::abs(emp.estimate - ref) / emp.std_error);
    }
    o.add(worst < 3.0, "HFLM, 1e5 paths, 5 probes: max |z| = %.2f (need < 3; s_cap %.1f, tail bound %.1e)",
          worst, cap.s_cap, cap.bound);

    double const h = 0.7;
    SimOptions fo;
    fo.n_paths = 100000;
    fo.seed = 20261;
    auto const fb = sample_fbm(h, {1.0, 2.0}, fo);
    double const expect[3] = {1.0, std::pow(2.0, 2 * h - 1.0), std::pow(2.0, 2 * h)};
    double zmax = 0.0;
    for (int k = 0; k < 3; ++k)
    {
        std::size_t const i = k == 2 ? 1 : 0, j = k == 0 ? 0 : 1;
        double s = 0.0, s2 = 0.0;
        for (std::size_t n = 0; n < fb.n_paths; ++n)
        {
            double const v = fb.at(n, i).real() * fb.at(n, j).real();
            s += v;
            s2 += v * v;
        }
        double const N = static_cast<double>(fb.n_paths);
        double const mean = s / N;
        double const se = std::sqrt((s2 / N - mean * mean) / N);
        zmax = std::max(zmax, std::abs(mean - expect[k]) / se);
    }
    o.add(zmax < 3.0, "fBm H=0.7 covariances (1, 2^0.4, 2^1.4): max |z| = %.2f (need < 3)", zmax);
    return o;
}

// 7. Structural invariants.
Outcome invariants()
{
    Outcome o;
    std::mt19937_64 gen(77);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double scaling = 0.0, modulus = 0.0;
    for (int k = 0; k < 1000; ++k)
    {
        ProcessParams const p{0.05 + 1.9 * u(gen), 0.02 + 0.96 * u(gen), u(gen), u(gen)};
        double const t = -5.0 + 10.0 * u(gen);
        double const s = (u(gen) < 0.5 ? -1.0 : 1.0) * std::pow(10.0, -3.0 + 5.0 * u(gen));
        double const eps = std::pow(10.0, -3.0 + 4.0 * u(gen));
        double const h = -5.0 + 10.0 * u(gen);
        auto const lhs = kernel(p, eps * t, s);
        auto const rhs = std::pow(eps, p.scaling_exponent()) * kernel(p, t, eps * s);
        // Errors are measured against the modulus bound |t| |w(s)|.
        double const bound = std::abs(eps * t * spectral_weight(p, s));
        if (bound > 0.0)
            scaling = std::max(scaling, std::abs(lhs - rhs) / bound);
        double const inc = std::abs(kernel(p, t + h, s) - kernel(p, h, s));
        double const base = std::abs(kernel(p, t, s));
        double const scale = std::abs((std::abs(t) + std::abs(h)) * spectral_weight(p, s));
        if (scale > 0.0)
            modulus = std::max(modulus, std::abs(inc - base) / scale);
    }
    o.add(scaling < 1e-12, "kernel scaling identity, 1e3 triples: max err %.1e relative to |t w(s)| (tol 1e-12)", scaling);
    o.add(modulus < 1e-12, "increment modulus identity, 1e3 triples: max err %.1e relative to |t w(s)| (tol 1e-12)", modulus);

    ChfEngine const e(model(ModelKind::smoothed_pareto, 1.2));
    ProcessParams const p{1.2, 0.7, 1.0, 0.4};
    FddSpec const f{{0.5, 1.0, 2.0}, {1.0, -0.3, 0.2}, {0.0, 0.5, -0.6}};
    double rot = 0.0, budget = 0.0;
    for (double eps : {1.0, 0.25})
    {
        auto const a = e.log_chf_fdd(p, f, eps);
        for (double ang : {0.7, 2.9})
        {
            auto const b = e.log_chf_fdd(p, rotate(f, ang), eps);
            rot = std::max(rot, std::abs(a.value - b.value));
            budget = std::max(budget, a.error + b.error);
        }
    }
    o.add(rot <= budget, "A_eps under common theta rotation: max change %.1e (quadrature error %.1e)",
          rot, budget);

    double hom = 0.0;
    for (double c : {0.5, 3.0})
    {
        FddSpec g = f;
        for (double& t : g.times)
            t *= c;
        double const ratio = scale_integral(p, g).value / scale_integral(p, f).value;
        hom = std::max(hom, std::abs(ratio / std::pow(c, p.alpha * p.hurst) - 1.0));
    }
    o.add(hom < 1e-6, "scale_integral homogeneity t -> ct: max rel err %.1e (tol 1e-6)", hom);
    return o;
}

// 8. Gaussian tangent for a compact-support driver.
Outcome gaussian_tangent()
{
    Outcome o;
    ModelSpec s;
    s.kind = ModelKind::compact_support;
    ChfEngine const e{LevyModel{s}};
    ProcessParams const p{1.5, 0.3, 1.0, 0.0};
    auto const r = gaussian_tangent_report(e, p, {1.0, 2.0}, {1.0, 1.0 / 32, 1.0 / 1024});
    double const d = std::abs(r.ratio / r.ratio_expected - 1.0);
    o.add(d < 0.05, "H_G = %.4f: sigma12/sigma11 = %.5f vs %.5f, rel diff %.1e (tol 0.05)",
          r.hurst_gaussian, r.ratio, r.ratio_expected, d);
    return o;
}

}  // namespace

int main(int argc, char** argv)
{
    std::set<int> only, expect_fail;
    for (int k = 1; k < argc; ++k)
    {
        bool const o = std::strcmp(argv[k], "--only") == 0;
        bool const x = std::strcmp(argv[k], "--expect-fail") == 0;
        if ((o || x) && k + 1 < argc)
            (o ? only : expect_fail).insert(std::atoi(argv[++k]));
        else
        {
            std::fprintf(stderr, "usage: %s [--only N]... [--expect-fail N]...\n", argv[0]);
            return 2;
        }
    }

    std::vector<std::pair<char const*, std::function<Outcome()>>> const suite{
        {"stable self-similarity", stable_self_similarity},
        {"smoothed-pareto convergence", smoothed_pareto_convergence},
        {"stable constants", constants},
        {"psi engine", psi_engine},
        {"existence", existence},
        {"monte carlo vs quadrature", monte_carlo},
        {"structural invariants", invariants},
        {"gaussian tangent", gaussian_tangent},
    };

    std::set<int> failed;
    for (std::size_t k = 0; k < suite.size(); ++k)
    {
        int const id = static_cast<int>(k + 1);
        if (!only.empty() && !only.count(id))
            continue;
        auto const t0 = std::chrono::steady_clock::now();
        Outcome out;
        try
        {
            out = suite[k].second();
        }
        catch (std::exception const& e)
        {
            out.add(false, "exception: %s", e.what());
        }
        double const sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!out.pass())
            failed.insert(id);
        std::printf("criterion %d: %s  %s (%.1fs)\n", id, out.pass() ? "PASS" : "FAIL", suite[k].first, sec);
        for (auto const& c : out.checks)
            std::printf("    [%s] %s\n", c.pass ? "ok" : "FAIL", c.what.c_str());
        std::fflush(stdout);
    }

    std::printf("failing criteria:");
    for (int id : failed)
        std::printf(" %d", id);
    std::printf(failed.empty() ? " none\n" : "\n");
    for (int id : expect_fail)
        if ((only.empty() || only.count(id)) && !failed.count(id))
            std::printf("criterion %d was expected to fail but passed\n", id);
    std::set<int> expected;
    for (int id : expect_fail)
        if (only.empty() || only.count(id))
            expected.insert(id);
    return failed == expected ? 0 : 1;
}
