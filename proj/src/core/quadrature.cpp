// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#include "quadrature.hpp"

#include <algorithm>
#include <numbers>

#include "error.hpp"

namespace hflm::quad {

GaussLegendre::GaussLegendre(int order)
{
    require(order >= 1, "GaussLegendre: order must be positive");
    nodes_.resize(order);
    weights_.resize(order);
    int const n = order;
    for (int i = 0; i < (n + 1) / 2; ++i)
    {
        // Newton on P_n starting from the Chebyshev-like guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it)
        {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k)
            {
                double const p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double const pn = (n == 1) ? x : p1;
            double const pnm1 = (n == 1) ? 1.0 : p0;
            dp = n * (x * pn - pnm1) / (x * x - 1.0);
            double const dx = pn / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        double const w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes_[i] = -x;
        nodes_[n - 1 - i] = x;
        weights_[i] = w;
        weights_[n - 1 - i] = w;
    }
    if (n % 2 == 1)
        nodes_[n / 2] = 0.0;
}

std::vector<double> geometric_breaks(double lo, double hi, int per_decade)
{
    require(lo > 0 && hi > lo, "geometric_breaks: need 0 < lo < hi");
    require(per_decade >= 1, "geometric_breaks: per_decade must be >= 1");
    double const q = std::pow(10.0, 1.0 / per_decade);
    std::vector<double> out{hi};
    double x = hi;
    while (x / q > lo)
    {
        x /= q;
        out.push_back(x);
    }
    out.push_back(lo);
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<double> uniform_breaks(double lo, double hi, double step)
{
    require(hi >= lo && step > 0, "uniform_breaks: bad range");
    auto const n = static_cast<std::size_t>(std::ceil((hi - lo) / step));
    std::vector<double> out;
    out.reserve(n + 1);
    for (std::size_t k = 0; k < n; ++k)
        out.push_back(lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n));
    out.push_back(hi);
    return out;
}

}  // namespace hflm::quad
