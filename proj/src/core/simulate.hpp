// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "kernel.hpp"
#include "levy_model.hpp"
#include "rng.hpp"

namespace hflm {

struct PathEnsemble
{
    std::vector<double> times;
    // Row-major: paths[i * times.size() + j] = X_{t_j} on path i.
    std::vector<std::complex<double>> paths;
    std::size_t n_paths = 0;
    std::uint64_t seed = 0;
    std::string process;  // "hflm", "hfsm" or "fbm"
    std::map<std::string, std::string> metadata;

    std::complex<double> at(std::size_t path, std::size_t time) const
    {
        return paths[path * times.size() + time];
    }
    std::size_t time_index(double t) const;  // throws when t is not on the grid
};

struct TruncationCheck
{
    double s_cap = 0.0;
    // Bound on the neglected part of the log characteristic function at the
    // configured probes.
    double bound = 0.0;
    double tolerance = 0.0;
};

// Bound on |psi(z)| of the form k_psi |z|^q_psi: C kappa c1 with the model
// alpha for heavy-tailed models, (pi / 2) int r^3 f(r) dr with q = 2 for
// compact support.
struct PsiBound
{
    double k_psi = 0.0;
    double q_psi = 0.0;
};
PsiBound psi_bound(LevyModel const& model);

// Largest, over the probes, bound on the part of the log characteristic
// function contributed by |s| > s_cap, using |g(s)| <= 2 |coef| sum_j |w_j|
// |s|^(p-1) with w_j = theta1_j + i theta2_j.
double spectral_tail_bound(ProcessParams const& params, std::vector<FddSpec> const& probes,
                           PsiBound bound, double s_cap);

// Smallest cap whose tail bound is <= tol.
TruncationCheck choose_s_cap(ProcessParams const& params, std::vector<FddSpec> const& probes,
                             PsiBound bound, double tol);

struct SimOptions
{
    std::size_t n_paths = 1000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

// Poisson shot noise with intensity ds nu(dx) on [-s_cap, s_cap] x R^2 (only
// [0, s_cap] when b = 0); requires a finite-mass model. s_cap must satisfy the
// tail bound at the probes to `tol`, otherwise DomainError.
PathEnsemble sample_hflm(LevyModel const& model, ProcessParams const& params,
                         std::vector<double> const& times, double s_cap,
                         std::vector<FddSpec> const& probes, double tol, SimOptions const& opts);

// Nodes and weights of the spectral discretization used by sample_hfsm.
struct SpectralGrid
{
    std::vector<double> nodes;
    std::vector<double> weights;
    double s_cap = 0.0;
    // Tail bound for a probe with sum_j |w_j| = 1 and c0_tail = 1; scales
    // like (sum_j |w_j|)^alpha c0_tail.
    double tail_bound = 0.0;
};

// Gauss-Legendre panels: geometric toward 0 (closed by a power-law remainder
// cell), half-period panels to s_cap.
SpectralGrid hfsm_spectral_grid(ProcessParams const& params, std::vector<double> const& times,
                                double s_cap, int gl_order = 8, double floor_rel = 1e-8);

// X_t = sum_k f_t(s_k) M_k with isotropic complex alpha-stable M_k of
// log-CF -c0_tail kappa c1 w_k |theta|^alpha, generated as sqrt(A) (G1, G2).
PathEnsemble sample_hfsm(ProcessParams const& params, std::vector<double> const& times,
                         SpectralGrid const& grid, double c0_tail, SimOptions const& opts);

// Positive (a)-stable variate with Laplace transform exp(-lambda^a), a in (0,1).
double positive_stable(double a, RngStream& rng);

// Real-valued fBm through the dense Cholesky factor of the covariance.
PathEnsemble sample_fbm(double hurst, std::vector<double> const& times, SimOptions const& opts);

struct EmpiricalChf
{
    double estimate = 0.0;    // log |mean exp(i Y)|
    double std_error = 0.0;   // delta-method standard error
    double imag_mean = 0.0;   // Im mean exp(i Y), ~0 by symmetry
};

EmpiricalChf empirical_log_chf(PathEnsemble const& ens, FddSpec const& fdd);

// Samples Y = sum_j theta1_j Re X_{t_j} + theta2_j Im X_{t_j}, one per path.
std::vector<double> probe_samples(PathEnsemble const& ens, FddSpec const& fdd);

// One row per path per time: path,t,re,im. `header` lines are written as
// "# ..." comments first.
void write_ensemble_csv(PathEnsemble const& ens, std::ostream& out,
                        std::vector<std::string> const& header = {});
void write_ensemble_metadata(PathEnsemble const& ens, std::ostream& out);

// Two-sample Kolmogorov-Smirnov statistic and asymptotic p-value.
struct KsResult
{
    double statistic = 0.0;
    double p_value = 1.0;
};
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

}  // namespace hflm
