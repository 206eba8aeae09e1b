#pragma once

#include <stdexcept>
#include <string>

namespace tropgeo {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or unreadable input (JSON, rational literals, ...).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Operands live in spaces of different dimension.
struct DimensionError : Error {
    explicit DimensionError(const std::string& what) : Error(what) {}
};

/// A documented precondition of an operation is violated.
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

} // namespace tropgeo
