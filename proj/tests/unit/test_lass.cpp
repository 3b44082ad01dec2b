// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include <gtest/gtest.h>

#include "error.hpp"
#include "lass.hpp"

using namespace hflm;

namespace {

ChfEngine make(ModelKind k, double alpha)
{
    ModelSpec s;
    s.kind = k;
    s.alpha = alpha;
    return ChfEngine{LevyModel{s}};
}

std::vector<double> const kEps{1.0, 0.25, 0.0625, 0.015625};

}  // namespace

TEST(Spearman, Basics)
{
    EXPECT_NEAR(spearman({1, 2, 3, 4}, {10, 20, 25, 100}), 1.0, 1e-15);
    EXPECT_NEAR(spearman({1, 2, 3, 4}, {4, 3, 2, 1}), -1.0, 1e-15);
    // Ties share the average rank.
    EXPECT_NEAR(spearman({1, 2, 3}, {1, 1, 2}), std::sqrt(0.75), 1e-12);
    EXPECT_THROW(spearman({1}, {1}), InvalidArgument);
}

TEST(OlsSlope, Line)
{
    EXPECT_NEAR(ols_slope({0, 1, 2, 3}, {1, 3, 5, 7}), 2.0, 1e-14);
    EXPECT_THROW(ols_slope({1, 1}, {0, 1}), InvalidArgument);
}

TEST(LassReport, PureStableHasNoError)
{
    auto const e = make(ModelKind::pure_stable, 1.5);
    ProcessParams const p{1.5, 0.3, 1.0, 0.0};
    auto const r = lass_report(e, p, FddSpec::single(1.0, 1.0, 0.0), kEps);
    ASSERT_EQ(r.rel_err.size(), kEps.size());
    for (double x : r.rel_err)
        EXPECT_LT(x, 1e-6);
    EXPECT_TRUE(r.pass);
}

TEST(LassReport, SmoothedParetoErrorShrinks)
{
    auto const e = make(ModelKind::smoothed_pareto, 1.2);
    ProcessParams const p{1.2, 0.7, 1.0, 0.0};
    auto const f = FddSpec::single(1.0, 1.0, 0.0);
    auto const r = lass_report(e, p, f, kEps);
    EXPECT_GT(r.spearman, 0.9);
    EXPECT_GT(r.slope, 0.0);
    for (std::size_t k = 1; k < r.abs_err.size(); ++k)
        EXPECT_LT(r.abs_err[k], r.abs_err[k - 1]);

    auto const up = rescaling_check(e, p, f, kEps, r, 0.8);
    auto const down = rescaling_check(e, p, f, kEps, r, 0.6);
    EXPECT_TRUE(up.diverges);
    EXPECT_TRUE(down.diverges);
    EXPECT_NEAR(up.expected_slope, -0.12, 1e-12);
    EXPECT_NEAR(up.slope, up.expected_slope, 0.03);
    EXPECT_NEAR(down.slope, down.expected_slope, 0.03);
}

TEST(LassReport, Preconditions)
{
    auto const sp = make(ModelKind::smoothed_pareto, 1.2);
    auto const f = FddSpec::single(1.0, 1.0, 0.0);
    EXPECT_THROW(lass_report(sp, {1.5, 0.7, 1.0, 0.0}, f, kEps), DomainError);
    EXPECT_THROW(lass_report(sp, {1.2, 0.7, 1.0, 0.0}, f, {1.0, 0.5}), InvalidArgument);
    EXPECT_THROW(lass_report(sp, {1.2, 0.7, 1.0, 0.0}, f, {0.5, 1.0, 0.25}), InvalidArgument);
    auto const cs = make(ModelKind::compact_support, 1.5);
    EXPECT_THROW(lass_report(cs, {1.5, 0.7, 1.0, 0.0}, f, kEps), DomainError);
}

TEST(GaussianTangent, FbmGramRatio)
{
    auto const cs = make(ModelKind::compact_support, 1.5);
    ProcessParams const p{1.5, 0.3, 1.0, 0.0};
    auto const r = gaussian_tangent_report(cs, p, {1.0, 2.0}, {1.0, 1.0 / 64, 1.0 / 1024});
    EXPECT_NEAR(r.hurst_gaussian, 0.3 + 1.0 / 1.5 - 0.5, 1e-15);
    EXPECT_NEAR(r.ratio_expected, std::pow(2.0, 2 * r.hurst_gaussian - 1.0), 1e-14);
    EXPECT_NEAR(r.ratio / r.ratio_expected, 1.0, 0.01);
    EXPECT_LT(r.residual, 0.01);
    EXPECT_NEAR(r.diag_ratio.front(), 1.0, 0.1);
}

TEST(GaussianTangent, Preconditions)
{
    auto const sp = make(ModelKind::smoothed_pareto, 1.5);
    EXPECT_THROW(gaussian_tangent_report(sp, {1.5, 0.3, 1.0, 0.0}, {1.0}, kEps), DomainError);
    auto const cs = make(ModelKind::compact_support, 1.5);
    // H + 1/alpha - 1/2 = 1.1
    EXPECT_THROW(gaussian_tangent_report(cs, {1.2, 0.77, 1.0, 0.0}, {1.0}, kEps), DomainError);
}
