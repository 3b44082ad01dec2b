// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "error.hpp"
#include "levy_model.hpp"
#include "oracle_values.hpp"
#include "stable_limit.hpp"

using namespace hflm;

namespace {

ModelSpec spec(ModelKind k, double alpha = 1.2)
{
    ModelSpec s;
    s.kind = k;
    s.alpha = alpha;
    return s;
}

}  // namespace

TEST(LevyModel, SmoothedParetoValues)
{
    LevyModel const m(spec(ModelKind::smoothed_pareto));
    EXPECT_NEAR(m.radial_density(5.0), oracle::kSmoothedParetoAt5, 1e-15);
    EXPECT_NEAR(m.total_mass(), oracle::kSmoothedParetoMass, 1e-12);
    EXPECT_NEAR(m.density_at({3.0, 4.0}), oracle::kSmoothedParetoAt5, 1e-15);
}

TEST(LevyModel, DensityIsRadial)
{
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (auto kind : {ModelKind::smoothed_pareto, ModelKind::truncated_stable,
                      ModelKind::pure_stable, ModelKind::compact_support})
    {
        LevyModel const m(spec(kind));
        for (int k = 0; k < 200; ++k)
        {
            double const x = -3.0 + 6.0 * u(gen), y = -3.0 + 6.0 * u(gen);
            double const a = 2.0 * std::numbers::pi * u(gen);
            double const xr = std::cos(a) * x - std::sin(a) * y;
            double const yr = std::sin(a) * x + std::cos(a) * y;
            double const r = std::hypot(x, y);
            // Skip points straddling a discontinuity of the profile.
            if (std::abs(r - 1.0) < 1e-9 || std::abs(r - 0.5) < 1e-9 || std::abs(r - 1.5) < 1e-9)
                continue;
            EXPECT_NEAR(m.density_at({x, y}), m.density_at({xr, yr}),
                        1e-12 * m.density_at({x, y}));
        }
    }
}

TEST(LevyModel, MassAndTail)
{
    LevyModel const ts(spec(ModelKind::truncated_stable, 1.5));
    EXPECT_EQ(ts.radial_density(0.5), 0.0);
    EXPECT_NEAR(ts.total_mass(), 2.0 * std::numbers::pi / 1.5, 1e-12);
    EXPECT_NEAR(ts.tail_mass(2.0), std::pow(2.0, -1.5) / 1.5, 1e-14);

    auto cs = spec(ModelKind::compact_support);
    cs.level = 2.0;
    LevyModel const c(cs);
    EXPECT_NEAR(c.total_mass(), 2.0 * std::numbers::pi * (1.5 * 1.5 - 0.25), 1e-12);
    EXPECT_EQ(c.tail_mass(2.0), 0.0);
    EXPECT_NEAR(c.inner_moment2(10.0), 2.0 * (std::pow(1.5, 4) - std::pow(0.5, 4)) / 4.0, 1e-12);

    EXPECT_TRUE(std::isinf(LevyModel(spec(ModelKind::pure_stable)).total_mass()));
}

TEST(LevyModel, RadialIntegralMatchesClosedForm)
{
    LevyModel const m(spec(ModelKind::smoothed_pareto));
    double const v = m.radial_integral([](double r) { return r; }, 1.0, 0.0, kInf);
    EXPECT_NEAR(2.0 * std::numbers::pi * v, oracle::kSmoothedParetoMass, 1e-9);
    double const t = m.radial_integral([](double r) { return r; }, 1.0, 3.0, kInf);
    EXPECT_NEAR(t, m.tail_mass(3.0), 1e-10);
}

TEST(LevyModel, Domain)
{
    EXPECT_THROW(LevyModel(spec(ModelKind::smoothed_pareto, 2.0)), DomainError);
    auto s = spec(ModelKind::smoothed_pareto);
    s.c_bound = 0.5;
    EXPECT_THROW(LevyModel{s}, DomainError);
    auto c = spec(ModelKind::compact_support);
    c.r_outer = 0.2;
    EXPECT_THROW(LevyModel{c}, DomainError);
    EXPECT_THROW(LevyModel(spec(ModelKind::pure_stable)).radial_density(-1.0), DomainError);
}

TEST(TailDomination, HeavyFamiliesPass)
{
    std::vector<double> radii;
    for (int k = -2; k <= 6; ++k)
        radii.push_back(std::pow(10.0, k));
    for (auto kind : {ModelKind::smoothed_pareto, ModelKind::truncated_stable, ModelKind::pure_stable})
    {
        auto const rep = verify_tail_domination(LevyModel(spec(kind)), radii, 1e-3);
        EXPECT_TRUE(rep.pass);
        EXPECT_NEAR(rep.ratio_curve.back(), 1.0, 1e-3);
    }
    EXPECT_THROW(verify_tail_domination(LevyModel(spec(ModelKind::compact_support)), radii, 1e-3),
                 DomainError);
    // Too short a radius range: the ratio has not reached 1 yet.
    EXPECT_FALSE(verify_tail_domination(LevyModel(spec(ModelKind::smoothed_pareto)), {1.0, 10.0}, 1e-3)
                     .pass);
}

TEST(RealPartMoments, PureStable)
{
    LevyModel const m(spec(ModelKind::pure_stable));
    // Inner second moment: c1(alpha) / (2 - alpha).
    EXPECT_NEAR(real_part_moment(m, 2.0, MomentRegion::inner), c1(1.2) / 0.8, 1e-6);
    EXPECT_TRUE(std::isinf(real_part_moment(m, 1.2, MomentRegion::outer)));
    EXPECT_TRUE(std::isinf(real_part_moment(m, 1.0, MomentRegion::inner)));
    // Outer moment of order p < alpha: c1(alpha) / (alpha - p).
    EXPECT_NEAR(real_part_moment(m, 0.5, MomentRegion::outer), c1(1.2) / 0.7, 1e-6);
}

TEST(RealPartMoments, LargeOrderStaysFinite)
{
    LevyModel const m(spec(ModelKind::smoothed_pareto));
    double const v = real_part_moment(m, 30.0, MomentRegion::inner);
    EXPECT_TRUE(std::isfinite(v));
    EXPECT_GT(v, 0.0);
}

TEST(Admissibility, FiniteForEveryFamily)
{
    for (auto kind : {ModelKind::smoothed_pareto, ModelKind::truncated_stable,
                      ModelKind::pure_stable, ModelKind::compact_support})
    {
        double const a = admissibility_integral(LevyModel(spec(kind)), 16);
        EXPECT_TRUE(std::isfinite(a));
        EXPECT_GT(a, 0.0);
    }
}
