// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "run_config.hpp"
#include "svg_plot.hpp"

using namespace hflm_cli;

TEST(RunConfig, DefaultsRoundTrip)
{
    RunConfig const c;
    EXPECT_EQ(parse_config(serialize(c)), c);
    EXPECT_EQ(parse_config(""), c);
}

TEST(RunConfig, EditedConfigRoundTrips)
{
    RunConfig c = parse_config(R"(
[model]
kind = "compact-support"
r_inner = 0.25
[process]
alpha = 1.7
hurst = 0.123456789012345
b = 0.1
[[probe]]
times = [1, 2.5]
theta1 = [0.1, 0.2]
theta2 = [0.3, -0.4]
[[probe]]
times = [3.0]
[simulate]
process = "fbm"
seed = "18446744073709551615"
)",
                               {});
    EXPECT_EQ(c.model.kind, HFLM_COMPACT_SUPPORT);
    EXPECT_EQ(c.probes.size(), 2u);
    EXPECT_EQ(c.probes[1].theta1, std::vector<double>{0.0});
    EXPECT_EQ(c.sim.seed, 18446744073709551615ULL);
    RunConfig const back = parse_config(serialize(c));
    EXPECT_EQ(back, c);
    EXPECT_EQ(back.process.hurst, 0.123456789012345);
    EXPECT_EQ(config_hash(back), config_hash(c));
}

TEST(RunConfig, HashTracksContent)
{
    RunConfig a;
    RunConfig b;
    EXPECT_EQ(config_hash(a), config_hash(b));
    EXPECT_EQ(config_hash(a).size(), 16u);
    b.process.hurst = 0.71;
    EXPECT_NE(config_hash(a), config_hash(b));
    RunConfig c;
    c.sim.threads = 8;
    EXPECT_EQ(config_hash(a), config_hash(c));
}

TEST(RunConfig, Overrides)
{
    auto const c = parse_config("[process]\nhurst = 0.4\n",
                                {"process.hurst=0.6", "model.kind=pure-stable",
                                 "lass.eps=[1.0, 0.5, 0.25]", "output.plots=false"});
    EXPECT_EQ(c.process.hurst, 0.6);
    EXPECT_EQ(c.model.kind, HFLM_PURE_STABLE);
    EXPECT_EQ(c.eps, (std::vector<double>{1.0, 0.5, 0.25}));
    EXPECT_FALSE(c.plots);
    EXPECT_THROW(parse_config("", {"hurst=0.6"}), ConfigError);
    EXPECT_THROW(parse_config("", {"process.hurst"}), ConfigError);
}

TEST(RunConfig, Errors)
{
    EXPECT_THROW(parse_config("[model\nkind = 1"), ConfigError);
    EXPECT_THROW(parse_config("[model]\nkind = \"gaussian\"\n"), ConfigError);
    EXPECT_THROW(parse_config("[model]\nalpha = \"one\"\n"), ConfigError);
    EXPECT_THROW(parse_config("[model]\nbeta = 1.0\n"), ConfigError);
    EXPECT_THROW(parse_config("[extra]\nx = 1\n"), ConfigError);
    EXPECT_THROW(parse_config("[[probe]]\ntimes = [1.0]\ntheta1 = [1.0, 2.0]\n"), ConfigError);
    EXPECT_THROW(parse_config("[simulate]\nprocess = \"brownian\"\n"), ConfigError);
    EXPECT_THROW(load_config("/nonexistent/config.toml"), ConfigError);
}

TEST(SvgPlot, DeterministicAndFiltered)
{
    PlotSpec const spec{"t<1>", "x", "y", true, true};
    std::vector<Series> const s{{"a", {1.0, 0.1, 0.01, -1.0}, {0.5, 0.2, 0.1, 1.0}, true}};
    auto const one = render_svg(spec, s);
    EXPECT_EQ(one, render_svg(spec, s));
    EXPECT_NE(one.find("<svg"), std::string::npos);
    EXPECT_NE(one.find("t&lt;1&gt;"), std::string::npos);
    // The negative x point is dropped on a log axis: three markers remain.
    std::size_t n = 0;
    for (std::size_t p = one.find("<circle"); p != std::string::npos; p = one.find("<circle", p + 1))
        ++n;
    EXPECT_EQ(n, 3u);
}
