// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#include <cstdint>
#include <cstring>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "run_config.hpp"

int main(int argc, char** argv)
{
    using namespace hflm_cli;

    // "hflm run <cmd> ..." and "hflm <cmd> ..." are the same.
    std::vector<char*> args(argv, argv + argc);
    if (args.size() > 1 && std::strcmp(args[1], "run") == 0)
        args.erase(args.begin() + 1);

    CLI::App app{"Harmonizable fractional Levy motion toolkit"};
    app.set_version_flag("--version", std::string(hflm_version()));
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> sets;
    std::optional<std::string> out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> threads;
    app.add_option("--config", config_path, "TOML run configuration")->check(CLI::ExistingFile);
    app.add_option("--set", sets, "Override a config value, section.key=value")
        ->take_all()
        ->allow_extra_args(false);
    app.add_option("--out", out_dir, "Output directory");
    app.add_option("--seed", seed, "Simulation seed");
    app.add_option("--threads", threads, "Worker threads for simulation")
        ->check(CLI::PositiveNumber);

    char const* const subs[][2] = {
        {"exists", "Existence conditions for the configured model and process"},
        {"chf", "Tabulate A_eps over the probes and eps schedule"},
        {"limit", "Stable-limit constants and log characteristic functions"},
        {"lass", "Convergence of A_eps to the tangent limit"},
        {"simulate", "Simulate paths and compare empirical and computed log-CFs"},
        {"validate", "Run the invariant suite"},
    };
    for (auto const& s : subs)
        app.add_subcommand(s[0], s[1])->fallthrough();

    if (args.size() > 1 && args[1][0] != '-' && app.get_subcommand_no_throw(args[1]) == nullptr)
    {
        std::cerr << "hflm: unknown subcommand '" << args[1]
                  << "' (exists, chf, limit, lass, simulate, validate)\n";
        return kExitConfigOrDomain;
    }

    try
    {
        app.parse(static_cast<int>(args.size()), args.data());
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfigOrDomain;
    }

    std::string const name = app.get_subcommands().front()->get_name();
    try
    {
        std::vector<std::string> overrides = sets;
        if (out_dir)
            overrides.push_back("output.dir=\"" + *out_dir + "\"");
        if (seed)
            overrides.push_back("simulate.seed=\"" + std::to_string(*seed) + "\"");
        if (threads)
            overrides.push_back("simulate.threads=" + std::to_string(*threads));
        RunConfig const cfg =
            config_path.empty() ? parse_config("", overrides) : load_config(config_path, overrides);
        return run_command(name, cfg, std::cout);
    }
    catch (ConfigError const& e)
    {
        std::cerr << "hflm: config error: " << e.what() << '\n';
        return kExitConfigOrDomain;
    }
    catch (LibraryError const& e)
    {
        std::cerr << "hflm: " << e.what() << '\n';
        return kExitConfigOrDomain;
    }
    catch (std::exception const& e)
    {
        std::cerr << "hflm: error: " << e.what() << '\n';
        return kExitConfigOrDomain;
    }
}
