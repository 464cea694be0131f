//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file mcrt/error.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mcrt
{
//---------------------------------------------------------------------------//
/*!
 * Failure categories shared by every module.
 *
 * The numeric values double as CLI exit codes (see mcrt.h).
 */
enum class ErrorKind : int
{
    domain = 2,      //!< Bad input parameter or violated precondition
    structural = 3,  //!< Map/rotation/embedding structure is inconsistent
    solver = 4,      //!< Iterative solver did not reach tolerance
    timeout = 5,     //!< Random walk exceeded its step budget
    overflow = 6,    //!< Sandpile mass reached the window boundary
    io = 7,          //!< File could not be read or written
};

char const* to_string(ErrorKind kind) noexcept;

//---------------------------------------------------------------------------//
//! Base exception carrying an ErrorKind.
class Error : public std::runtime_error
{
  public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

class DomainError : public Error
{
  public:
    explicit DomainError(std::string const& what)
        : Error(ErrorKind::domain, what)
    {
    }
};

class StructuralError : public Error
{
  public:
    explicit StructuralError(std::string const& what)
        : Error(ErrorKind::structural, what)
    {
    }
};

//! Solver failure with the residual actually achieved.
class SolverError : public Error
{
  public:
    SolverError(std::string const& what, double residual)
        : Error(ErrorKind::solver, what), residual_(residual)
    {
    }
    double residual() const noexcept { return residual_; }

  private:
    double residual_;
};

//! Walk step budget exhausted; carries the walker's partial state.
class TimeoutError : public Error
{
  public:
    TimeoutError(std::string const& what,
                 std::uint32_t vertex,
                 std::uint64_t steps)
        : Error(ErrorKind::timeout, what), vertex_(vertex), steps_(steps)
    {
    }
    std::uint32_t vertex() const noexcept { return vertex_; }
    std::uint64_t steps() const noexcept { return steps_; }

  private:
    std::uint32_t vertex_;
    std::uint64_t steps_;
};

class OverflowError : public Error
{
  public:
    explicit OverflowError(std::string const& what)
        : Error(ErrorKind::overflow, what)
    {
    }
};

class IoError : public Error
{
  public:
    explicit IoError(std::string const& what) : Error(ErrorKind::io, what) {}
};

//---------------------------------------------------------------------------//
}  // namespace mcrt
