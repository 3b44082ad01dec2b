// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace hflm_cli {

struct Series
{
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    bool markers = true;
};

struct PlotSpec
{
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = false;
};

// Standalone SVG line chart. Non-finite points (and non-positive ones on a
// log axis) are dropped. Output depends only on the inputs.
std::string render_svg(PlotSpec const& spec, std::vector<Series> const& series);

}  // namespace hflm_cli
