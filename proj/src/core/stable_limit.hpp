// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "kernel.hpp"
#include "quad_spec.hpp"
#include "quadrature.hpp"

namespace hflm {

struct StableLimitConstants
{
    double alpha = 1.0;
    double kappa = 0.0;  // integral of (1 - cos r) r^(-1-alpha) over (0, inf)
    double c1 = 0.0;     // integral of |cos s|^alpha over [0, 2 pi]
};

// Closed forms.
double kappa(double alpha);
double c1(double alpha);

// Independent numerical evaluations of the same integrals.
double kappa_quadrature(double alpha);
double c1_quadrature(double alpha);

// Memoized per alpha; safe to call from several threads.
StableLimitConstants const& stable_constants(double alpha);

// Exponent of the isotropic stable law: psi(z) = -c0 kappa c1 |z|^alpha.
double stable_exponent(double alpha, double c0_tail, double rho);

// Integral over R of |g(u)|^alpha.
quad::Estimate scale_integral(ProcessParams const& params, FddSpec const& fdd,
                              QuadSpec const& qs = {});

// -c0_tail kappa c1 scale_integral: log characteristic function of the
// tangent stable process at the probe.
double log_chf_limit(ProcessParams const& params, FddSpec const& fdd, double c0_tail,
                     QuadSpec const& qs = {});

}  // namespace hflm
