#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bsym {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid (q, b, n, d, r, w, ...) arguments.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Words or codes with mismatched length or alphabet.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// The operation is defined only for n >= b (or a similar structural limit).
class UnsupportedParametersError : public Error {
public:
    using Error::Error;
};

class EmptyCodeError : public Error {
public:
    using Error::Error;
};

/// Minimum distance of a code with fewer than two words.
class UndefinedDistanceError : public Error {
public:
    using Error::Error;
};

/// The instance exceeds what exhaustive enumeration is allowed to touch.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Malformed code file; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A file could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// The LP solver reached a state a valid bound instance can never produce.
class SolverError : public Error {
public:
    using Error::Error;
};

}  // namespace bsym
