// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#include "run_config.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#define TOML_EXCEPTIONS 1
#include <toml.hpp>

namespace hflm_cli {
namespace {

std::string fmt(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto const r = std::to_chars(buf, buf + sizeof buf, x);
    std::string s(buf, r.ptr);
    if (s.find_first_of(".en") == std::string::npos)
        s += ".0";
    return s;
}

std::string fmt(std::vector<double> const& v)
{
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? ", " : "") + fmt(v[k]);
    return s + "]";
}

std::string quoted(std::string const& s)
{
    std::string out = "\"";
    for (char c : s)
    {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

// Reads typed values from one table and rejects keys nobody asked for.
class Section
{
  public:
    Section(toml::table const* tbl, std::string name) : tbl_(tbl), name_(std::move(name)) {}

    ~Section() noexcept(false)
    {
        if (tbl_ == nullptr || std::uncaught_exceptions() > 0)
            return;
        for (auto const& [k, v] : *tbl_)
            if (!seen_.count(std::string(k.str())))
                throw ConfigError("unknown config key '" + name_ + "." + std::string(k.str())
                                  + "'");
    }

    void get(char const* key, double& out)
    {
        if (auto const* n = find(key))
        {
            if (auto v = n->value<double>())
                out = *v;
            else
                throw wrong_type(key, "a number");
        }
    }

    void get(char const* key, std::uint64_t& out)
    {
        // Values above the signed 64-bit range arrive as digit strings.
        if (auto const* n = find(key))
        {
            if (auto const* v = n->as_integer(); v && v->get() >= 0)
            {
                out = static_cast<std::uint64_t>(v->get());
                return;
            }
            if (auto const* v = n->as_string())
            {
                auto const& str = v->get();
                std::uint64_t x = 0;
                auto const r = std::from_chars(str.data(), str.data() + str.size(), x);
                if (!str.empty() && r.ec == std::errc{} && r.ptr == str.data() + str.size())
                {
                    out = x;
                    return;
                }
            }
            throw wrong_type(key, "a non-negative integer");
        }
    }

    void get(char const* key, int& out)
    {
        std::uint64_t v = static_cast<std::uint64_t>(out);
        get(key, v);
        out = static_cast<int>(v);
    }

    void get(char const* key, unsigned& out)
    {
        std::uint64_t v = out;
        get(key, v);
        out = static_cast<unsigned>(v);
    }

    void get(char const* key, bool& out)
    {
        if (auto const* n = find(key))
        {
            if (auto v = n->value<bool>(); v && n->is_boolean())
                out = *v;
            else
                throw wrong_type(key, "a boolean");
        }
    }

    void get(char const* key, std::string& out)
    {
        if (auto const* n = find(key))
        {
            if (auto v = n->value<std::string>(); v && n->is_string())
                out = *v;
            else
                throw wrong_type(key, "a string");
        }
    }

    void get(char const* key, std::vector<double>& out)
    {
        if (auto const* n = find(key))
        {
            auto const* arr = n->as_array();
            if (arr == nullptr)
                throw wrong_type(key, "an array of numbers");
            std::vector<double> v;
            for (auto const& e : *arr)
            {
                auto x = e.value<double>();
                if (!x)
                    throw wrong_type(key, "an array of numbers");
                v.push_back(*x);
            }
            out = std::move(v);
        }
    }

  private:
    toml::node const* find(char const* key)
    {
        seen_.insert(key);
        return tbl_ ? tbl_->get(key) : nullptr;
    }

    ConfigError wrong_type(char const* key, char const* what) const
    {
        return ConfigError("config key '" + name_ + "." + key + "' must be " + what);
    }

    toml::table const* tbl_;
    std::string name_;
    std::set<std::string> seen_;
};

toml::table const* subtable(toml::table const& root, char const* name)
{
    auto const* n = root.get(name);
    if (n == nullptr)
        return nullptr;
    if (!n->is_table())
        throw ConfigError(std::string("config section '") + name + "' must be a table");
    return n->as_table();
}

void apply_override(toml::table& root, std::string const& item)
{
    auto const eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ConfigError("override '" + item + "' is not of the form key=value");
    std::string const path = item.substr(0, eq);
    std::string const text = item.substr(eq + 1);
    auto const dot = path.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == path.size()
        || path.find('.', dot + 1) != std::string::npos)
        throw ConfigError("override key '" + path + "' must be section.key");
    std::string const section = path.substr(0, dot);
    std::string const key = path.substr(dot + 1);

    auto* sec = root.get(section);
    if (sec == nullptr)
    {
        root.insert(section, toml::table{});
        sec = root.get(section);
    }
    if (!sec->is_table())
        throw ConfigError("override section '" + section + "' is not a table");

    toml::table parsed;
    try
    {
        parsed = toml::parse("v = " + text);
    }
    catch (toml::parse_error const&)
    {
        sec->as_table()->insert_or_assign(key, text);
        return;
    }
    sec->as_table()->insert_or_assign(key, *parsed.get("v"));
}

}  // namespace

hflm_model_kind model_kind_from_name(std::string const& name)
{
    static std::map<std::string, hflm_model_kind> const kinds{
        {"smoothed-pareto", HFLM_SMOOTHED_PARETO},
        {"truncated-stable", HFLM_TRUNCATED_STABLE},
        {"pure-stable", HFLM_PURE_STABLE},
        {"compact-support", HFLM_COMPACT_SUPPORT},
    };
    auto const it = kinds.find(name);
    if (it == kinds.end())
        throw ConfigError("unknown model kind '" + name
                          + "' (smoothed-pareto, truncated-stable, pure-stable, compact-support)");
    return it->second;
}

RunConfig::RunConfig()
{
    hflm_model_spec_default(&model);
    model.alpha = 1.2;
    hflm_quad_spec_default(&quad);
}

bool RunConfig::operator==(RunConfig const& o) const
{
    // Field-wise on the canonical text; it lists every field exactly.
    return serialize(*this) == serialize(o);
}

RunConfig parse_config(std::string const& toml_text, std::vector<std::string> const& overrides)
{
    toml::table root;
    try
    {
        root = toml::parse(toml_text);
    }
    catch (toml::parse_error const& e)
    {
        std::ostringstream msg;
        msg << "malformed config: " << e.description() << " at line " << e.source().begin.line;
        throw ConfigError(msg.str());
    }
    for (auto const& o : overrides)
        apply_override(root, o);

    static std::set<std::string> const sections{"model", "process", "probe", "quad",
                                                "lass",  "simulate", "output"};
    for (auto const& [k, v] : root)
        if (!sections.count(std::string(k.str())))
            throw ConfigError("unknown config section '" + std::string(k.str()) + "'");

    RunConfig cfg;
    {
        Section s(subtable(root, "model"), "model");
        s.get("kind", cfg.model_kind);
        cfg.model.kind = model_kind_from_name(cfg.model_kind);
        s.get("alpha", cfg.model.alpha);
        s.get("c0_tail", cfg.model.c0_tail);
        s.get("c_bound", cfg.model.c_bound);
        s.get("r0", cfg.model.r0);
        s.get("r_inner", cfg.model.r_inner);
        s.get("r_outer", cfg.model.r_outer);
        s.get("level", cfg.model.level);
    }
    {
        Section s(subtable(root, "process"), "process");
        s.get("alpha", cfg.process.alpha);
        s.get("hurst", cfg.process.hurst);
        s.get("a", cfg.process.a);
        s.get("b", cfg.process.b);
    }
    if (auto const* n = root.get("probe"))
    {
        auto const* arr = n->as_array();
        if (arr == nullptr || !arr->is_array_of_tables())
            throw ConfigError("'probe' must be an array of tables ([[probe]])");
        cfg.probes.clear();
        for (auto const& e : *arr)
        {
            ProbeConfig p;
            Section s(e.as_table(), "probe");
            s.get("times", p.times);
            s.get("theta1", p.theta1);
            s.get("theta2", p.theta2);
            if (p.theta1.empty())
                p.theta1.assign(p.times.size(), 0.0);
            if (p.theta2.empty())
                p.theta2.assign(p.times.size(), 0.0);
            if (p.times.empty() || p.theta1.size() != p.times.size()
                || p.theta2.size() != p.times.size())
                throw ConfigError("probe times, theta1 and theta2 must be non-empty and of equal length");
            cfg.probes.push_back(std::move(p));
        }
    }
    {
        Section s(subtable(root, "quad"), "quad");
        s.get("abs_tol", cfg.quad.abs_tol);
        s.get("rel_tol", cfg.quad.rel_tol);
        s.get("u_max", cfg.quad.u_max);
        s.get("r_max", cfg.quad.r_max);
        s.get("panels_per_decade", cfg.quad.panels_per_decade);
        s.get("floor_decades", cfg.quad.floor_decades);
        s.get("spectral_periods", cfg.quad.spectral_periods);
        s.get("cache_per_decade", cfg.quad.cache_per_decade);
        s.get("cache_rho_min", cfg.quad.cache_rho_min);
        s.get("cache_rho_max", cfg.quad.cache_rho_max);
    }
    {
        Section s(subtable(root, "lass"), "lass");
        s.get("eps", cfg.eps);
        s.get("target_rel", cfg.target_rel);
        s.get("index_offset", cfg.index_offset);
        s.get("gaussian_times", cfg.gaussian_times);
    }
    {
        Section s(subtable(root, "simulate"), "simulate");
        s.get("process", cfg.sim.process);
        s.get("n_paths", cfg.sim.n_paths);
        s.get("seed", cfg.sim.seed);
        s.get("threads", cfg.sim.threads);
        s.get("times", cfg.sim.times);
        s.get("tol", cfg.sim.tol);
        s.get("s_cap", cfg.sim.s_cap);
        s.get("write_paths", cfg.sim.write_paths);
        if (cfg.sim.process != "hflm" && cfg.sim.process != "hfsm" && cfg.sim.process != "fbm")
            throw ConfigError("simulate.process must be hflm, hfsm or fbm");
    }
    {
        Section s(subtable(root, "output"), "output");
        s.get("dir", cfg.out_dir);
        s.get("plots", cfg.plots);
    }
    return cfg;
}

RunConfig load_config(std::string const& path, std::vector<std::string> const& overrides)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), overrides);
}

std::string serialize(RunConfig const& c)
{
    std::ostringstream o;
    auto kv = [&](char const* k, std::string const& v) { o << k << " = " << v << '\n'; };
    auto u = [](std::uint64_t v) {
        return v > static_cast<std::uint64_t>(INT64_MAX) ? "\"" + std::to_string(v) + "\""
                                                          : std::to_string(v);
    };
    o << "[model]\n";
    kv("kind", quoted(c.model_kind));
    kv("alpha", fmt(c.model.alpha));
    kv("c0_tail", fmt(c.model.c0_tail));
    kv("c_bound", fmt(c.model.c_bound));
    kv("r0", fmt(c.model.r0));
    kv("r_inner", fmt(c.model.r_inner));
    kv("r_outer", fmt(c.model.r_outer));
    kv("level", fmt(c.model.level));
    o << "\n[process]\n";
    kv("alpha", fmt(c.process.alpha));
    kv("hurst", fmt(c.process.hurst));
    kv("a", fmt(c.process.a));
    kv("b", fmt(c.process.b));
    for (auto const& p : c.probes)
    {
        o << "\n[[probe]]\n";
        kv("times", fmt(p.times));
        kv("theta1", fmt(p.theta1));
        kv("theta2", fmt(p.theta2));
    }
    o << "\n[quad]\n";
    kv("abs_tol", fmt(c.quad.abs_tol));
    kv("rel_tol", fmt(c.quad.rel_tol));
    kv("u_max", fmt(c.quad.u_max));
    kv("r_max", fmt(c.quad.r_max));
    kv("panels_per_decade", u(static_cast<std::uint64_t>(c.quad.panels_per_decade)));
    kv("floor_decades", fmt(c.quad.floor_decades));
    kv("spectral_periods", u(static_cast<std::uint64_t>(c.quad.spectral_periods)));
    kv("cache_per_decade", u(static_cast<std::uint64_t>(c.quad.cache_per_decade)));
    kv("cache_rho_min", fmt(c.quad.cache_rho_min));
    kv("cache_rho_max", fmt(c.quad.cache_rho_max));
    o << "\n[lass]\n";
    kv("eps", fmt(c.eps));
    kv("target_rel", fmt(c.target_rel));
    kv("index_offset", fmt(c.index_offset));
    kv("gaussian_times", fmt(c.gaussian_times));
    o << "\n[simulate]\n";
    kv("process", quoted(c.sim.process));
    kv("n_paths", u(c.sim.n_paths));
    kv("seed", u(c.sim.seed));
    kv("threads", u(c.sim.threads));
    kv("times", fmt(c.sim.times));
    kv("tol", fmt(c.sim.tol));
    kv("s_cap", fmt(c.sim.s_cap));
    kv("write_paths", c.sim.write_paths ? "true" : "false");
    o << "\n[output]\n";
    kv("dir", quoted(c.out_dir));
    kv("plots", c.plots ? "true" : "false");
    return o.str();
}

std::string config_hash(RunConfig const& cfg)
{
    // The thread count does not change any result, so it is not hashed.
    RunConfig c = cfg;
    c.sim.threads = 1;
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : serialize(c))
    {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace hflm_cli
