#pragma once

#include <stdexcept>
#include <string>

namespace pebbling {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (bad vertex, t = 0,
/// disconnected graph where connectivity is required, ...).
class PreconditionError : public Error
{
public:
    using Error::Error;
};

/// Malformed textual input. `line()` is 1-based, 0 when not tied to a line.
class FormatError : public Error
{
public:
    FormatError(const std::string & message, int line = 0) :
        Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line)
    {
    }

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A configured size cap was exceeded; the caller may raise the cap.
class CapExceeded : public Error
{
public:
    using Error::Error;
};

} // namespace pebbling
