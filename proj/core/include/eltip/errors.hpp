#pragma once

#include <stdexcept>
#include <string>

namespace eltip {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two objects that must share a dimension (spin count, state size) do not.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A spin or coupling index is outside the valid range.
class IndexError : public Error {
public:
    using Error::Error;
};

/// An argument violates a precondition other than range (e.g. swap(i, i)).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Structured input failed semantic validation (duplicates, bad values).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Text input is syntactically malformed. Carries a 1-based position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_ = 0;
    std::size_t column_ = 0;
};

/// The request exceeds a configured enumeration or step budget.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Numerical integration failed its accuracy bound (norm drift).
class IntegrationError : public Error {
public:
    using Error::Error;
};

} // namespace eltip
