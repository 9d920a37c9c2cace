#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hecke
{

enum class ErrorKind {
    DegenerateLattice,
    WrongOrientation,
    ShellTooLarge,
    TooCloseToPole,
    ToleranceNotReached,
    BadModulus,
    ConsistencyFailure,
    SlowConvergence,
    OutsideStrip,
    BadExponent,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Base of every exception thrown by the library. The kind is what callers
// (the CLI, the verification suite) dispatch on.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept
    {
        return kind_;
    }

private:
    ErrorKind kind_;
};

class ToleranceNotReached : public Error
{
public:
    ToleranceNotReached(double requested, double achieved)
        : Error(ErrorKind::ToleranceNotReached,
                "tolerance " + std::to_string(requested) + " not reached, achieved " + std::to_string(achieved)),
          requested_(requested), achieved_(achieved)
    {
    }

    double requested() const noexcept
    {
        return requested_;
    }
    double achieved() const noexcept
    {
        return achieved_;
    }

private:
    double requested_;
    double achieved_;
};

class ParseError : public Error
{
public:
    ParseError(std::size_t position, const std::string &msg)
        : Error(ErrorKind::ParseError, "parse error at position " + std::to_string(position) + ": " + msg),
          position_(position)
    {
    }

    std::size_t position() const noexcept
    {
        return position_;
    }

private:
    std::size_t position_;
};

} // namespace hecke
