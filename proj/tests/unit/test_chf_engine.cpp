// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "chf_engine.hpp"
#include "error.hpp"
#include "oracle_values.hpp"
#include "stable_limit.hpp"

using namespace hflm;

namespace {

LevyModel model(ModelKind k, double alpha = 1.2)
{
    ModelSpec s;
    s.kind = k;
    s.alpha = alpha;
    return LevyModel{s};
}

// One engine per family is enough; building the cache is the slow part.
ChfEngine const& engine(ModelKind k)
{
    static ChfEngine const sp(model(ModelKind::smoothed_pareto));
    static ChfEngine const ps(model(ModelKind::pure_stable));
    static ChfEngine const cs(model(ModelKind::compact_support, 1.5));
    switch (k)
    {
    case ModelKind::pure_stable: return ps;
    case ModelKind::compact_support: return cs;
    default: return sp;
    }
}

}  // namespace

TEST(Psi, SmoothedParetoReferenceValues)
{
    auto const m = model(ModelKind::smoothed_pareto);
    for (auto const& [rho, v] : oracle::kSmoothedParetoPsi)
    {
        EXPECT_NEAR(psi_radial(m, rho, {}), v, 1e-8 * std::abs(v)) << rho;
        EXPECT_NEAR(engine(ModelKind::smoothed_pareto).exponent()(rho), v, 1e-5 * std::abs(v))
            << rho;
    }
}

TEST(Psi, PureStableClosedForm)
{
    auto const& ex = engine(ModelKind::pure_stable).exponent();
    for (double rho : {1e-4, 0.3, 1.0, 7.0, 500.0})
    {
        double const expect = stable_exponent(1.2, 1.0, rho);
        EXPECT_NEAR(ex.direct(rho) / expect, 1.0, 1e-6) << rho;
        EXPECT_NEAR(ex(rho) / expect, 1.0, 1e-5) << rho;
    }
    auto const law = ex.small_rho_law();
    EXPECT_NEAR(law.exponent, 1.2, 1e-6);
}

TEST(Psi, ZeroNonPositiveRadial)
{
    for (auto k : {ModelKind::smoothed_pareto, ModelKind::pure_stable, ModelKind::compact_support})
    {
        auto const& ex = engine(k).exponent();
        EXPECT_EQ(ex(0.0), 0.0);
        for (double r : {1e-6, 1e-2, 0.5, 3.0, 40.0, 1e4})
        {
            double const v = ex(r);
            EXPECT_LE(v, 0.0) << r;
            for (double a : {0.3, 2.0, 4.4})
                EXPECT_NEAR(ex(Vec2{r * std::cos(a), r * std::sin(a)}), v, 1e-10 * std::abs(v));
        }
    }
}

TEST(Psi, FiniteMassLimit)
{
    auto const& ex = engine(ModelKind::compact_support).exponent();
    double const mass = ex.model().total_mass();
    EXPECT_NEAR(ex(1e8), -mass, 1e-6 * mass);
}

TEST(Psi, CompactSupportQuadraticAtOrigin)
{
    auto const& ex = engine(ModelKind::compact_support).exponent();
    double const m2 = ex.model().inner_moment2(kInf);
    double const rho = 1e-4;
    EXPECT_NEAR(ex.direct(rho), -0.5 * std::numbers::pi * m2 * rho * rho, 1e-6 * rho * rho);
}

TEST(Psi, BruteForceAgrees)
{
    auto const m = model(ModelKind::smoothed_pareto);
    for (Vec2 z : {Vec2{2.0, 1.0}, Vec2{-0.3, 0.1}})
    {
        auto const bf = psi_bruteforce(m, z);
        double const v = psi(m, z);
        EXPECT_LE(std::abs(bf.value - v), 3.0 * bf.error + 1e-8) << bf.value << " vs " << v;
    }
}

TEST(LogChf, PureStableIsSelfSimilar)
{
    ProcessParams const p{1.2, 0.7, 1.0, 0.0};
    auto const f = FddSpec::single(1.0, 1.0, 0.0);
    double const lim = log_chf_limit(p, f, 1.0);
    for (double eps : {1.0, 0.0625, 1.0 / 1024})
    {
        auto const a = engine(ModelKind::pure_stable).log_chf_fdd(p, f, eps);
        EXPECT_NEAR(a.value / lim, 1.0, 1e-6) << eps;
    }
}

TEST(LogChf, RotationInvariant)
{
    ProcessParams const p{1.2, 0.7, 1.0, 0.3};
    FddSpec const f{{1.0, 2.0}, {0.5, -0.2}, {0.1, 0.4}};
    double const c = std::cos(2.0), s = std::sin(2.0);
    FddSpec r = f;
    for (std::size_t j = 0; j < f.size(); ++j)
    {
        r.theta1[j] = c * f.theta1[j] - s * f.theta2[j];
        r.theta2[j] = s * f.theta1[j] + c * f.theta2[j];
    }
    auto const& e = engine(ModelKind::smoothed_pareto);
    auto const a = e.log_chf_fdd(p, f, 0.25);
    auto const b = e.log_chf_fdd(p, r, 0.25);
    EXPECT_NEAR(a.value, b.value, std::max(1e-9, a.error));
}

TEST(LogChf, RawAndSubstitutedCoordinatesAgree)
{
    ProcessParams const p{1.2, 0.7, 1.0, 0.0};
    auto const f = FddSpec::single(1.0, 1.0, 0.0);
    auto const& e = engine(ModelKind::smoothed_pareto);
    ChfOptions raw;
    raw.raw_coordinates = true;
    for (double eps : {1.0, 0.25})
    {
        double const a = e.log_chf_fdd(p, f, eps).value;
        double const b = e.log_chf_fdd(p, f, eps, raw).value;
        EXPECT_NEAR(a / b, 1.0, 1e-6) << eps;
    }
}

TEST(LogChf, DegenerateProbeIsZero)
{
    ProcessParams const p{1.2, 0.7, 1.0, 0.0};
    EXPECT_EQ(engine(ModelKind::smoothed_pareto).log_chf_fdd(p, FddSpec::single(0.0, 1.0, 0.0), 1.0).value,
              0.0);
    EXPECT_EQ(engine(ModelKind::smoothed_pareto).log_chf_fdd(p, FddSpec::single(1.0, 0.0, 0.0), 1.0).value,
              0.0);
}

TEST(LogChf, ConvergesTowardLimit)
{
    ProcessParams const p{1.2, 0.7, 1.0, 0.0};
    auto const f = FddSpec::single(1.0, 1.0, 0.0);
    double const lim = log_chf_limit(p, f, 1.0);
    auto const& e = engine(ModelKind::smoothed_pareto);
    double prev = kInf;
    for (double eps : {1.0, 1.0 / 16, 1.0 / 256})
    {
        double const err = std::abs(e.log_chf_fdd(p, f, eps).value - lim);
        EXPECT_LT(err, prev);
        prev = err;
    }
}

TEST(LogChf, Domain)
{
    auto const& e = engine(ModelKind::smoothed_pareto);
    auto const f = FddSpec::single(1.0, 1.0, 0.0);
    EXPECT_THROW(e.log_chf_fdd({1.2, 0.7, 1.0, 0.0}, f, 0.0), DomainError);
    EXPECT_THROW(e.log_chf_fdd({2.5, 0.7, 1.0, 0.0}, f, 1.0), DomainError);
}
