// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

#include "kernel.hpp"
#include "quad_spec.hpp"
#include "quadrature.hpp"

namespace hflm {

// h(rho) ~ coef * rho^exponent as rho -> 0.
struct SmallRhoLaw
{
    double coef = 1.0;
    double exponent = 1.0;
};

// Integral over u in R \ {0} of h(lambda * |g(u)|) for the probe `fdd`.
//
// The half-lines are integrated separately: a geometric mesh toward u = 0
// closed by a power-law endpoint remainder, uniform half-period panels over
// the oscillatory range, and beyond the truncation point the small-rho law
// of h combined with the period-averaged |g|^q envelope. The truncation
// point is placed on a multiple of the common period when the probe times
// are commensurate, which cancels the leading error of the averaged tail.
//
// The reported error adds the panel error estimates to the change observed
// when the truncation point is halved.
quad::Estimate integrate_spectral(ProcessParams const& params, FddSpec const& fdd,
                                  double lambda, std::function<double(double)> const& h,
                                  SmallRhoLaw law, QuadSpec const& qs);

// Mean of |sum_j conj(w_j) (e^{i sign t_j u} - 1)|^q over u, w_j = th1 + i th2.
double envelope_mean(FddSpec const& fdd, double sign, double q);

// Common period of the probe times, or 0 when no rational relation with
// denominator <= 64 exists.
double common_period(FddSpec const& fdd);

}  // namespace hflm
