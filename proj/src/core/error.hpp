// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace hflm {

// Base of every exception thrown by the numerical core. The C API maps each
// subclass onto one hflm_status code.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Parameter outside the admissible domain (alpha not in (0,2), s = 0, ...).
class DomainError : public Error
{
  public:
    using Error::Error;
};

// A quadrature or series did not reach its tolerance.
class NonConvergenceError : public Error
{
  public:
    using Error::Error;
};

// Caller broke a documented precondition (empty probe, unsorted grid, ...).
class InvalidArgument : public Error
{
  public:
    using Error::Error;
};

inline void require(bool ok, std::string const& what)
{
    if (!ok)
        throw InvalidArgument(what);
}

inline void require_domain(bool ok, std::string const& what)
{
    if (!ok)
        throw DomainError(what);
}

}  // namespace hflm
