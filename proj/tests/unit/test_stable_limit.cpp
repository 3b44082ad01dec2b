// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "error.hpp"
#include "oracle_values.hpp"
#include "stable_limit.hpp"

using namespace hflm;

TEST(StableConstants, ReferenceValues)
{
    for (auto const& [a, v] : oracle::kKappa)
    {
        EXPECT_NEAR(kappa(a), v, 1e-12 * v) << a;
        EXPECT_NEAR(kappa_quadrature(a), v, 1e-9 * v) << a;
    }
    for (auto const& [a, v] : oracle::kC1)
    {
        EXPECT_NEAR(c1(a), v, 1e-12 * v) << a;
        EXPECT_NEAR(c1_quadrature(a), v, 1e-9 * v) << a;
    }
}

TEST(StableConstants, SpecialPoints)
{
    EXPECT_NEAR(kappa(1.0), std::numbers::pi / 2, 1e-14);
    EXPECT_NEAR(c1(1.0), 4.0, 1e-14);
    EXPECT_NEAR(c1(2.0), std::numbers::pi, 1e-13);
    EXPECT_NEAR(kappa_quadrature(1.0), std::numbers::pi / 2, 1e-9);
    EXPECT_NEAR(c1_quadrature(1.0), 4.0, 1e-9);
    EXPECT_THROW(kappa(2.0), DomainError);
    EXPECT_THROW(c1(0.0), DomainError);
}

TEST(StableConstants, ClosedFormAgreesWithQuadratureNearOne)
{
    for (double a : {0.999, 1.001, 0.05, 1.95})
        EXPECT_NEAR(kappa_quadrature(a) / kappa(a), 1.0, 1e-8) << a;
}

TEST(StableExponent, PowerLaw)
{
    double const a = 1.3;
    auto const& c = stable_constants(a);
    EXPECT_NEAR(stable_exponent(a, 2.0, 3.0), -2.0 * c.kappa * c.c1 * std::pow(3.0, a), 1e-12);
    EXPECT_EQ(stable_exponent(a, 1.0, 0.0), 0.0);
}

TEST(ScaleIntegral, ReferenceValues)
{
    ProcessParams const p{1.2, 0.7, 1.0, 0.0};
    auto const s1 = scale_integral(p, FddSpec::single(1.0, 1.0, 0.0));
    auto const s2 = scale_integral(p, FddSpec::single(2.0, 1.0, 0.0));
    EXPECT_NEAR(s1.value, oracle::kScaleIntegralT1, 1e-8);
    EXPECT_NEAR(s2.value, oracle::kScaleIntegralT2, 1e-8);
    EXPECT_LT(s1.error, 1e-6);
}

TEST(ScaleIntegral, HomogeneousInTime)
{
    ProcessParams const p{1.5, 0.4, 1.0, 0.6};
    FddSpec const f{{0.5, 1.5}, {1.0, -0.4}, {0.3, 0.8}};
    double const base = scale_integral(p, f).value;
    for (double c : {0.25, 3.0})
    {
        FddSpec g = f;
        for (double& t : g.times)
            t *= c;
        double const expect = std::pow(c, p.alpha * p.hurst) * base;
        EXPECT_NEAR(scale_integral(p, g).value / expect, 1.0, 1e-6) << c;
    }
}

TEST(ScaleIntegral, HomogeneousInFrequency)
{
    ProcessParams const p{0.8, 0.6, 1.0, 0.0};
    FddSpec const f{{1.0, 2.0}, {1.0, 0.5}, {0.0, -0.5}};
    FddSpec g = f;
    for (std::size_t j = 0; j < g.size(); ++j)
    {
        g.theta1[j] *= 3.0;
        g.theta2[j] *= 3.0;
    }
    EXPECT_NEAR(scale_integral(p, g).value / scale_integral(p, f).value, std::pow(3.0, 0.8), 1e-7);
}

TEST(LimitLogChf, ScalesWithTailConstant)
{
    ProcessParams const p{1.2, 0.7, 1.0, 0.0};
    auto const f = FddSpec::single(1.0, 1.0, 0.0);
    double const l1 = log_chf_limit(p, f, 1.0);
    EXPECT_LT(l1, 0.0);
    EXPECT_NEAR(log_chf_limit(p, f, 2.5), 2.5 * l1, 1e-12 * std::abs(l1));
    auto const& c = stable_constants(1.2);
    EXPECT_NEAR(l1, -c.kappa * c.c1 * oracle::kScaleIntegralT1, 1e-7);
}
