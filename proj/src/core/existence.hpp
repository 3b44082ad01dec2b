// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "kernel.hpp"
#include "levy_model.hpp"

namespace hflm {

// Symmetric one-dimensional Levy density k |x|^(-1-delta) on |x| <= 1 and
// k |x|^(-1-tau) on |x| > 1. delta = -1 is a bounded density near 0;
// tau = +inf means no mass beyond 1.
struct Nu1D
{
    double k = 1.0;
    double delta = 1.0;
    double tau = 1.0;

    void validate() const;
    double density(double x) const;
};

struct ExistenceQuery
{
    double beta = 0.0;   // |f(s)| ~ |s|^beta at 0, beta <= 0
    double gamma = 1.0;  // |f(s)| ~ |s|^(-gamma) at infinity
    Nu1D nu;
    // The asymptotics are only O(.) bounds: a positive verdict is then
    // sufficient, a negative one inconclusive.
    bool bounds_only = false;

    void validate() const;
};

struct LemmaVerdict
{
    bool exists = false;
    bool sufficient_only = false;
    bool gamma_ok = false;
    double tail_moment = 0.0;   // integral of |x|^(1/gamma) over |x| > 1
    double small_moment = 0.0;  // integral of |x|^(1/(-beta)) over |x| <= 1; 0 when beta = 0
    bool cond_a = false;
    bool cond_b = false;
};

LemmaVerdict lemma_verdict(ExistenceQuery const& q);

struct HflmExistence
{
    bool exists = false;
    double outer_exponent = 0.0;  // 1 / (H + 1/alpha)
    double inner_exponent = 0.0;  // 1 / (H + 1/alpha - 1), 0 when vacuous
    double cond_a_value = 0.0;
    double cond_b_value = 0.0;
    bool cond_b_vacuous = false;
    // Same question through the one-dimensional lemma, with beta = 1 - H - 1/alpha
    // (clamped to 0) and gamma = H + 1/alpha on the projected power laws.
    ExistenceQuery shortcut_query;
    LemmaVerdict shortcut;
};

// Power-law exponents of the real-part Levy measure of a radial model.
Nu1D real_part_power_law(LevyModel const& model);

HflmExistence hflm_existence(LevyModel const& model, ProcessParams const& params);

struct OracleCaps
{
    double log2_x = 40.0;      // |x| in [2^-c, 2^c]
    double log2_s = 40.0;      // |s| <= 2^c
    double log2_s_floor = -60.0;
    int steps_per_octave = 8;
};

// Region order: A11 (|s|<=1,|x|<=1), A12 (|s|<=1,|x|>1), A21 (|s|>1,|x|<=1), A22.
struct OracleEstimate
{
    double total = 0.0;
    std::array<double, 4> per_region{};
};

// Double integral of min(1, |x g(s)|^2) nu(dx) ds with the comparison
// function g(s) = 1{|s|<=1}|s|^beta + 1{|s|>1}|s|^(-gamma), by log-space
// trapezoid sums truncated at the caps.
OracleEstimate rr_oracle(ExistenceQuery const& q, OracleCaps const& caps = {});

struct SaturationReport
{
    std::array<OracleEstimate, 4> estimates;  // caps x1, x2, x4, x8
    std::array<double, 3> rel_changes{};
    bool saturated = false;
};

// Runs rr_oracle with every cap multiplied by 2, 4, 8; saturated when each
// successive relative change is below `threshold`.
SaturationReport rr_saturation(ExistenceQuery const& q, OracleCaps const& caps = {},
                               double threshold = 0.01);

}  // namespace hflm
