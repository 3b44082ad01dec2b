/* Copyright 2026 The hflm Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the hflm library: planar rotation-invariant Levy models,
 * characteristic functions of harmonizable fractional Levy motions, their
 * stable tangent limits, existence checks and path simulation.
 *
 * Every function returns an hflm_status. On failure the message is kept in
 * thread-local storage and can be read with hflm_last_error() until the next
 * call on the same thread. Handles are opaque and must be released with the
 * matching destroy function; destroy accepts NULL. Model and engine handles
 * are immutable and may be shared between threads.
 */
#ifndef HFLM_HFLM_H
#define HFLM_HFLM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define HFLM_API __declspec(dllexport)
#else
#  define HFLM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hflm_status {
    HFLM_OK = 0,
    HFLM_ERR_DOMAIN = 1,          /* parameter outside the admissible domain */
    HFLM_ERR_NONCONVERGENCE = 2,  /* quadrature or series missed its tolerance */
    HFLM_ERR_INVALID = 3,         /* broken precondition, NULL pointer, bad size */
    HFLM_ERR_INTERNAL = 4
} hflm_status;

typedef enum hflm_model_kind {
    HFLM_SMOOTHED_PARETO = 0,   /* c0 (1 + r)^(-2-alpha) */
    HFLM_TRUNCATED_STABLE = 1,  /* c0 r^(-2-alpha) for r >= r0 */
    HFLM_PURE_STABLE = 2,       /* c0 r^(-2-alpha) */
    HFLM_COMPACT_SUPPORT = 3    /* level on r_inner <= r <= r_outer */
} hflm_model_kind;

typedef struct hflm_model_spec {
    hflm_model_kind kind;
    double alpha;
    double c0_tail;
    double c_bound; /* <= 0 selects the tight bound */
    double r0;
    double r_inner;
    double r_outer;
    double level;
} hflm_model_spec;

typedef struct hflm_process {
    double alpha;
    double hurst;
    double a;
    double b;
} hflm_process;

/* Times with frequencies acting on (Re X_t, Im X_t). */
typedef struct hflm_probe {
    size_t n;
    const double* times;
    const double* theta1;
    const double* theta2;
} hflm_probe;

typedef struct hflm_quad_spec {
    double abs_tol;
    double rel_tol;
    double u_max;
    double r_max;
    int panels_per_decade;
    double floor_decades;
    int spectral_periods;
    int cache_per_decade;
    double cache_rho_min;
    double cache_rho_max;
} hflm_quad_spec;

typedef struct hflm_model hflm_model;
typedef struct hflm_engine hflm_engine;
typedef struct hflm_ensemble hflm_ensemble;

HFLM_API const char* hflm_version(void);
HFLM_API const char* hflm_last_error(void);
HFLM_API const char* hflm_status_name(hflm_status status);

HFLM_API void hflm_model_spec_default(hflm_model_spec* spec);
HFLM_API void hflm_quad_spec_default(hflm_quad_spec* qs);

/* ---- models ---- */

HFLM_API hflm_status hflm_model_create(const hflm_model_spec* spec, hflm_model** out);
HFLM_API void hflm_model_destroy(hflm_model* model);
HFLM_API hflm_status hflm_model_density(const hflm_model* model, double x1, double x2,
                                        double* out);
/* +inf for pure-stable. */
HFLM_API hflm_status hflm_model_total_mass(const hflm_model* model, double* out);

/* Ratio curve r^(2+alpha) f(r) / c0_tail at the given radii. `ratios` may be NULL. */
HFLM_API hflm_status hflm_model_check_tail(const hflm_model* model, const double* radii, size_t n,
                                           double tol, int* pass, double* max_violation,
                                           double* ratios);

/* ---- kernel and characteristic functions ---- */

HFLM_API hflm_status hflm_kernel(const hflm_process* process, double t, double s, double* re,
                                 double* im);

/* psi(z) by direct quadrature. `qs` may be NULL. */
HFLM_API hflm_status hflm_psi(const hflm_model* model, double z1, double z2,
                              const hflm_quad_spec* qs, double* out);

/* Lattice-sum estimate of psi(z), for cross-checking. */
HFLM_API hflm_status hflm_psi_bruteforce(const hflm_model* model, double z1, double z2,
                                         double* value, double* error);

/* An engine caches psi on a log grid; construction takes a fraction of a second. */
HFLM_API hflm_status hflm_engine_create(const hflm_model* model, const hflm_quad_spec* qs,
                                        hflm_engine** out);
HFLM_API void hflm_engine_destroy(hflm_engine* engine);
HFLM_API hflm_status hflm_engine_psi(const hflm_engine* engine, double z1, double z2,
                                     double* out);

/* A_eps at the probe. rescale_index NaN uses the process Hurst index;
 * raw_coordinates != 0 integrates in the unscaled spectral variable.
 * `error` may be NULL. */
HFLM_API hflm_status hflm_log_chf(const hflm_engine* engine, const hflm_process* process,
                                  const hflm_probe* probe, double eps, double rescale_index,
                                  int raw_coordinates, double* value, double* error);

/* ---- stable limit ---- */

HFLM_API hflm_status hflm_stable_constants(double alpha, double* kappa, double* c1);
HFLM_API hflm_status hflm_stable_constants_quadrature(double alpha, double* kappa, double* c1);
HFLM_API hflm_status hflm_scale_integral(const hflm_process* process, const hflm_probe* probe,
                                         double* value, double* error);
HFLM_API hflm_status hflm_log_chf_limit(const hflm_process* process, const hflm_probe* probe,
                                        double c0_tail, double* out);

/* ---- existence ---- */

typedef struct hflm_existence_result {
    int exists;
    double outer_exponent;
    double inner_exponent;
    double cond_a_value;
    double cond_b_value;
    int cond_b_vacuous;
    int shortcut_exists;
    int shortcut_sufficient_only;
} hflm_existence_result;

HFLM_API hflm_status hflm_existence(const hflm_model* model, const hflm_process* process,
                                    hflm_existence_result* out);

/* One-dimensional integral f(t - s) L(ds): |f| ~ |s|^beta at 0, |s|^-gamma at
 * infinity, Levy density k|x|^(-1-delta) inside and k|x|^(-1-tau) outside
 * the unit interval (tau = +inf for none). */
typedef struct hflm_lemma_query {
    double beta;
    double gamma;
    double k;
    double delta;
    double tau;
    int bounds_only;
} hflm_lemma_query;

typedef struct hflm_lemma_result {
    int exists;
    int sufficient_only;
    int gamma_ok;
    double tail_moment;
    double small_moment;
    int cond_a;
    int cond_b;
} hflm_lemma_result;

HFLM_API hflm_status hflm_lemma_verdict(const hflm_lemma_query* query, hflm_lemma_result* out);

/* Truncated Rajput-Rosinski integral at growing caps; `estimates` holds 4
 * values and `rel_changes` 3 (either may be NULL). */
HFLM_API hflm_status hflm_lemma_saturation(const hflm_lemma_query* query, double threshold,
                                           int* saturated, double* estimates,
                                           double* rel_changes);

/* ---- tangent-limit verification ---- */

typedef struct hflm_lass_summary {
    double a_limit;
    double slope;
    double spearman;
    double final_rel_err;
    int pass;
} hflm_lass_summary;

/* a_eps, a_err, rel_err are caller buffers of length n_eps (each may be NULL). */
HFLM_API hflm_status hflm_lass(const hflm_engine* engine, const hflm_process* process,
                               const hflm_probe* probe, const double* eps, size_t n_eps,
                               double target_rel, hflm_lass_summary* summary, double* a_eps,
                               double* a_err, double* rel_err);

/* Log-log drift of A_eps under index H' against the process index. */
HFLM_API hflm_status hflm_rescaling_check(const hflm_engine* engine, const hflm_process* process,
                                          const hflm_probe* probe, const double* eps,
                                          size_t n_eps, double index, double* slope,
                                          double* expected_slope, int* diverges);

typedef struct hflm_gaussian_summary {
    double hurst_gaussian;
    double scale;
    double residual;
    double ratio;
    double ratio_expected;
} hflm_gaussian_summary;

/* sigma: n_eps * n_times * n_times caller buffer, or NULL. */
HFLM_API hflm_status hflm_gaussian_tangent(const hflm_engine* engine, const hflm_process* process,
                                           const double* times, size_t n_times,
                                           const double* eps, size_t n_eps,
                                           hflm_gaussian_summary* summary, double* sigma);

/* ---- simulation ---- */

typedef struct hflm_sim_options {
    size_t n_paths;
    uint64_t seed;
    unsigned threads;
} hflm_sim_options;

HFLM_API void hflm_sim_options_default(hflm_sim_options* opts);

/* Smallest spectral cap whose tail contribution at every probe is <= tol. */
HFLM_API hflm_status hflm_choose_cap(const hflm_model* model, const hflm_process* process,
                                     const hflm_probe* probes, size_t n_probes, double tol,
                                     double* s_cap, double* bound);

/* Shot-noise paths of a finite-mass model, truncated at s_cap. */
HFLM_API hflm_status hflm_simulate_hflm(const hflm_model* model, const hflm_process* process,
                                        const double* times, size_t n_times, double s_cap,
                                        const hflm_probe* probes, size_t n_probes, double tol,
                                        const hflm_sim_options* opts, hflm_ensemble** out);

/* Paths of the stable tangent process on a discretized spectrum. */
HFLM_API hflm_status hflm_simulate_hfsm(const hflm_process* process, const double* times,
                                        size_t n_times, double s_cap, double c0_tail,
                                        const hflm_sim_options* opts, hflm_ensemble** out);

HFLM_API hflm_status hflm_simulate_fbm(double hurst, const double* times, size_t n_times,
                                       const hflm_sim_options* opts, hflm_ensemble** out);

HFLM_API void hflm_ensemble_destroy(hflm_ensemble* ens);
HFLM_API size_t hflm_ensemble_n_paths(const hflm_ensemble* ens);
HFLM_API size_t hflm_ensemble_n_times(const hflm_ensemble* ens);
/* X_{t_j} on path i. */
HFLM_API hflm_status hflm_ensemble_value(const hflm_ensemble* ens, size_t path, size_t time,
                                         double* re, double* im);

/* Attach key=value metadata, written to the sidecar file. */
HFLM_API hflm_status hflm_ensemble_set_meta(hflm_ensemble* ens, const char* key,
                                            const char* value);

/* CSV (path,t,re,im) with "# " comment lines first; sidecar of key=value lines. */
HFLM_API hflm_status hflm_ensemble_write_csv(const hflm_ensemble* ens, const char* path,
                                             const char* const* header, size_t n_header);
HFLM_API hflm_status hflm_ensemble_write_metadata(const hflm_ensemble* ens, const char* path);

HFLM_API hflm_status hflm_empirical_log_chf(const hflm_ensemble* ens, const hflm_probe* probe,
                                            double* estimate, double* std_error);

/* Per-path samples sum_j theta1_j Re X_{t_j} + theta2_j Im X_{t_j}; `out` has n_paths slots. */
HFLM_API hflm_status hflm_probe_samples(const hflm_ensemble* ens, const hflm_probe* probe,
                                        double* out);

HFLM_API hflm_status hflm_ks_two_sample(const double* a, size_t na, const double* b, size_t nb,
                                        double* statistic, double* p_value);

#ifdef __cplusplus
}
#endif

#endif /* HFLM_HFLM_H */
