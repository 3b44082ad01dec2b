// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hflm/hflm.h"
#include "run_config.hpp"

namespace hflm_cli {

enum ExitCode
{
    kExitOk = 0,
    kExitValidationFailed = 1,
    kExitConfigOrDomain = 2,
};

// Non-OK status from the library, with its message.
class LibraryError : public std::runtime_error
{
  public:
    LibraryError(hflm_status status, std::string const& what)
        : std::runtime_error(what), status_(status)
    {
    }
    hflm_status status() const { return status_; }

  private:
    hflm_status status_;
};

// Runs one subcommand; artifacts go to cfg.out_dir, a summary to `log`.
// Throws ConfigError or LibraryError.
int run_command(std::string const& name, RunConfig const& cfg, std::ostream& log);

}  // namespace hflm_cli
