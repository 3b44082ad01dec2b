// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <span>
#include <vector>

namespace hflm::quad {

struct Estimate
{
    double value = 0.0;
    double error = 0.0;

    Estimate& operator+=(Estimate const& o)
    {
        value += o.value;
        error += o.error;
        return *this;
    }
};

namespace detail {
// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
inline constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
}  // namespace detail

// One Gauss-Kronrod 15 panel; error is |K15 - G7|.
template<class F>
Estimate gk15(F const& f, double a, double b)
{
    double const c = 0.5 * (a + b);
    double const h = 0.5 * (b - a);
    double const fc = f(c);
    double resk = fc * detail::wgk[7];
    double resg = fc * detail::wg[3];
    for (int j = 0; j < 7; ++j)
    {
        double const dx = h * detail::xgk[j];
        double const s = f(c - dx) + f(c + dx);
        resk += detail::wgk[j] * s;
        if (j % 2 == 1)
            resg += detail::wg[j / 2] * s;
    }
    return {resk * h, std::abs((resk - resg) * h)};
}

// Globally adaptive bisection on top of gk15.
template<class F>
Estimate adaptive_gk15(F const& f, double a, double b, double abs_tol,
                       double rel_tol, int max_depth = 40)
{
    Estimate const whole = gk15(f, a, b);
    if (max_depth <= 0 || whole.error <= std::max(abs_tol, rel_tol * std::abs(whole.value)))
        return whole;
    double const m = 0.5 * (a + b);
    Estimate left = adaptive_gk15(f, a, m, 0.5 * abs_tol, rel_tol, max_depth - 1);
    left += adaptive_gk15(f, m, b, 0.5 * abs_tol, rel_tol, max_depth - 1);
    return left;
}

// Sum of gk15 over consecutive panels [b_k, b_{k+1}].
template<class F>
Estimate panels(F const& f, std::span<double const> breaks)
{
    Estimate total;
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k)
        if (breaks[k + 1] > breaks[k])
            total += gk15(f, breaks[k], breaks[k + 1]);
    return total;
}

// Fixed-order Gauss-Legendre rule on [-1, 1].
class GaussLegendre
{
  public:
    explicit GaussLegendre(int order);

    int order() const { return static_cast<int>(nodes_.size()); }

    template<class F>
    double integrate(F const& f, double a, double b) const
    {
        double const c = 0.5 * (a + b);
        double const h = 0.5 * (b - a);
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            acc += weights_[i] * f(c + h * nodes_[i]);
        return acc * h;
    }

    std::span<double const> nodes() const { return nodes_; }
    std::span<double const> weights() const { return weights_; }

  private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

// Geometric breakpoints hi, hi/q, hi/q^2, ... down to lo (inclusive), returned
// in increasing order, with q = 10^(1/per_decade).
std::vector<double> geometric_breaks(double lo, double hi, int per_decade);

// Uniform breakpoints from lo to hi with spacing at most `step`.
std::vector<double> uniform_breaks(double lo, double hi, double step);

}  // namespace hflm::quad
