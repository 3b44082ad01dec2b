// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <numbers>

namespace hflm {

// Tolerances, truncations and mesh controls shared by every integral in the
// library.
struct QuadSpec
{
    double abs_tol = 1e-9;
    double rel_tol = 1e-7;
    // Outer truncation of the spectral variable; 0 selects a multiple of the
    // probe's common period (see spectral_periods).
    double u_max = 0.0;
    // Radial truncation of the Bessel integral, in units of rho * r.
    double r_max = 1000.0 * std::numbers::pi;
    // Geometric panels per decade near singular endpoints.
    int panels_per_decade = 8;
    // How many decades the graded mesh extends toward u = 0 before the
    // power-law endpoint remainder takes over.
    double floor_decades = 30.0;
    // Number of common periods covered before the averaged tail is used
    // when u_max is 0.
    int spectral_periods = 2000;
    // Log-grid density and range of the cached psi profile.
    int cache_per_decade = 16;
    double cache_rho_min = 1e-10;
    double cache_rho_max = 1e6;

    void validate() const;
};

}  // namespace hflm
