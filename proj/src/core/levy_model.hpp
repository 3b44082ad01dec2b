// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace hflm {

using Vec2 = std::array<double, 2>;

enum class ModelKind
{
    smoothed_pareto,   // c0 (1 + |x|)^(-2-alpha)
    truncated_stable,  // c0 |x|^(-2-alpha) 1{|x| >= r0}
    pure_stable,       // c0 |x|^(-2-alpha)
    compact_support,   // level 1{r_inner <= |x| <= r_outer}
};

std::string_view to_string(ModelKind kind);
ModelKind model_kind_from_string(std::string_view name);

struct ModelSpec
{
    ModelKind kind = ModelKind::smoothed_pareto;
    double alpha = 1.0;
    double c0_tail = 1.0;
    // Domination constant; a non-positive value selects the tight bound for
    // the family (c0_tail for all three power-law families).
    double c_bound = 0.0;
    double r0 = 1.0;  // truncated-stable cut radius
    double r_inner = 0.5;
    double r_outer = 1.5;
    double level = 1.0;
};

// f(r) ~ coef * r^exponent near the origin or at infinity. `exact_within`
// is the radius inside which (origin) or beyond which (tail) the power law
// is used for analytic extrapolation. A zero coefficient means the density
// vanishes identically in that region.
struct PowerLaw
{
    double coef = 0.0;
    double exponent = 0.0;
    double exact_within = 0.0;
};

// Jump discontinuity of the radial profile: f(r+) - f(r-) = delta.
struct RadialJump
{
    double r;
    double delta;
};

enum class MomentRegion
{
    inner,  // |x_1| <= 1
    outer,  // |x_1| > 1
};

// Rotationally invariant Levy density on the plane. Immutable after
// construction.
class LevyModel
{
  public:
    explicit LevyModel(ModelSpec const& spec);

    ModelSpec const& spec() const { return spec_; }
    ModelKind kind() const { return spec_.kind; }
    double alpha() const { return spec_.alpha; }
    double c0_tail() const { return spec_.c0_tail; }
    double c_bound() const { return spec_.c_bound; }

    bool heavy_tailed() const { return spec_.kind != ModelKind::compact_support; }
    bool finite_mass() const { return spec_.kind != ModelKind::pure_stable; }

    double radial_density(double r) const;
    double density_at(Vec2 x) const;

    // nu(R^2); +inf for pure-stable.
    double total_mass() const;
    // Integral of f(r) r dr over [R, inf), i.e. nu(|x| > R) / (2 pi).
    double tail_mass(double radius) const;
    // Integral of r^3 f(r) dr over [0, R].
    double inner_moment2(double radius) const;

    PowerLaw origin_law() const;
    PowerLaw tail_law() const;
    std::vector<RadialJump> jumps() const;
    // Radii where the profile has a kink or jump; used as quadrature breaks.
    std::vector<double> features() const;

    // Integral of w(r) f(r) dr over [a, b] (b may be +inf) by graded panels,
    // with analytic power-law extrapolation below 1e-12 and above 1e8.
    // `w_exponent` is the power of w at the two ends (w ~ const r^w_exponent);
    // the constant is read off w at the cut radius. Returns +inf when an end piece
    // diverges.
    double radial_integral(std::function<double(double)> const& w, double w_exponent,
                           double a, double b, int per_decade = 16) const;

  private:
    ModelSpec spec_;
};

struct TailDominationReport
{
    std::vector<double> ratio_curve;
    double max_violation = 0.0;
    bool pass = false;
};

TailDominationReport verify_tail_domination(LevyModel const& model, std::vector<double> const& radii,
                                      double tol);

// Integral of min(1, |x|^2) nu(dx) computed by radial quadrature at the given
// mesh density.
double admissibility_integral(LevyModel const& model, int per_decade);

// Moments of the real-part Levy measure: integral of |x_1|^p over |x_1| > 1
// (outer) or |x_1| <= 1 (inner). Returns +inf when the exponent comparison
// proves divergence.
double real_part_moment(LevyModel const& model, double p, MomentRegion region);

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace hflm
