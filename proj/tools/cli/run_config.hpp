// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hflm/hflm.h"

namespace hflm_cli {

// Malformed TOML, unknown key, or a value of the wrong type.
class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct ProbeConfig
{
    std::vector<double> times;
    std::vector<double> theta1;
    std::vector<double> theta2;

    hflm_probe view() const { return {times.size(), times.data(), theta1.data(), theta2.data()}; }
    bool operator==(ProbeConfig const&) const = default;
};

struct SimConfig
{
    std::string process = "hflm";  // hflm, hfsm or fbm
    std::uint64_t n_paths = 1000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    std::vector<double> times{0.0, 0.5, 1.0, 2.0};
    double tol = 1e-3;   // spectral truncation budget at the probes
    double s_cap = 0.0;  // 0: smallest cap meeting tol
    bool write_paths = true;

    bool operator==(SimConfig const&) const = default;
};

struct RunConfig
{
    std::string model_kind = "smoothed-pareto";
    hflm_model_spec model{};
    hflm_process process{1.2, 0.7, 1.0, 0.0};
    std::vector<ProbeConfig> probes{{{1.0}, {1.0}, {0.0}}};
    hflm_quad_spec quad{};
    std::vector<double> eps{1.0, 0.25, 0.0625, 0.015625, 0.00390625, 0.0009765625};
    double target_rel = 0.05;
    double index_offset = 0.1;  // wrong-index rescalings H +- offset
    std::vector<double> gaussian_times{1.0, 2.0};
    SimConfig sim;
    std::string out_dir = "hflm_out";
    bool plots = true;

    RunConfig();
    bool operator==(RunConfig const& other) const;
};

// Parses TOML text; keys absent from the text keep their defaults.
// `overrides` are "section.key=value" strings applied before conversion; the
// value is read as a TOML value, or as a bare string if that fails.
RunConfig parse_config(std::string const& toml_text,
                       std::vector<std::string> const& overrides = {});
RunConfig load_config(std::string const& path, std::vector<std::string> const& overrides = {});

// Canonical TOML: every key, fixed order, shortest round-trip doubles.
std::string serialize(RunConfig const& cfg);

// FNV-1a 64 of serialize(cfg) with the thread count reset, as 16 hex digits.
std::string config_hash(RunConfig const& cfg);

hflm_model_kind model_kind_from_name(std::string const& name);

}  // namespace hflm_cli
