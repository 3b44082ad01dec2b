// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <limits>
#include <vector>

#include "kernel.hpp"
#include "levy_model.hpp"
#include "quad_spec.hpp"
#include "quadrature.hpp"
#include "spectral_integral.hpp"

namespace hflm {

// Radial Levy exponent psi(rho) = 2 pi int (J0(rho r) - 1) f(r) r dr of a
// rotationally invariant model. The constructor tabulates log(-psi) on a log
// grid; operator() interpolates, and extrapolates with power laws outside
// the grid (or returns -mass at large rho for finite-mass models).
class LevyExponent
{
  public:
    LevyExponent(LevyModel model, QuadSpec qs = {});

    LevyModel const& model() const { return model_; }
    QuadSpec const& quad_spec() const { return qs_; }

    double operator()(double rho) const;
    double operator()(Vec2 z) const { return (*this)(std::hypot(z[0], z[1])); }

    // Bessel-reduced quadrature, no cache.
    double direct(double rho) const;

    // psi(rho) ~ coef rho^q as rho -> 0, read off the first grid nodes.
    SmallRhoLaw small_rho_law() const { return small_; }

    std::vector<double> const& grid_log_rho() const { return log_rho_; }
    std::vector<double> const& grid_log_value() const { return log_val_; }

  private:
    LevyModel model_;
    QuadSpec qs_;
    std::vector<double> log_rho_;
    std::vector<double> log_val_;
    SmallRhoLaw small_;
    SmallRhoLaw large_;
    double mass_ = kInf;
};

// psi at radius rho by Bessel-reduced quadrature.
double psi_radial(LevyModel const& model, double rho, QuadSpec const& qs);

// psi(z) by direct quadrature.
double psi(LevyModel const& model, Vec2 z, QuadSpec const& qs = {});

// K(theta, s) for a homogeneous driver; equal to psi(theta) for every s.
inline double k_function(LevyExponent const& exponent, Vec2 theta, double /*s*/)
{
    return exponent(theta);
}

struct BruteForceLattice
{
    int cells_per_half_width = 64;  // doubled to resolve oscillation where needed
    double hole_scale = 1e-8;       // innermost half-width, in units of 1/|z|
    double outer_scale = 200.0;     // outer radius, in units of 1/|z|
};

// Cartesian midpoint sum of (cos<z,x> - 1) f(|x|) over nested square annuli.
// Inside the hole the integrand is replaced by its quadratic term; beyond the
// outer radius only the -1 part is kept. The value is Richardson-extrapolated
// from full and half resolution; the error adds that difference to a bound on
// the dropped cosine tail. Intended as a test oracle.
quad::Estimate psi_bruteforce(LevyModel const& model, Vec2 z, BruteForceLattice lattice = {});

struct ChfOptions
{
    // Index H' in eps^{-H'} X_{eps t}; NaN selects the process Hurst index.
    double rescale_index = std::numeric_limits<double>::quiet_NaN();
    // Integrate in the original spectral variable s instead of u = eps s.
    bool raw_coordinates = false;
};

// Log characteristic function A_eps of eps^{-H'} X_{eps t} at the probe.
class ChfEngine
{
  public:
    explicit ChfEngine(LevyModel model, QuadSpec qs = {});

    LevyExponent const& exponent() const { return exponent_; }

    quad::Estimate log_chf_fdd(ProcessParams const& params, FddSpec const& fdd, double eps,
                               ChfOptions const& opts = {}) const;

  private:
    LevyExponent exponent_;
};

double log_chf_fdd(LevyModel const& model, ProcessParams const& params, FddSpec const& fdd,
                   double eps, QuadSpec const& qs = {});

}  // namespace hflm
