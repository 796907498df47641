#pragma once

#include <stdexcept>
#include <string>

namespace mvp {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text (bad timestamp, broken JSON, ...).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Structurally invalid input (missing columns, too many class cells, ...).
class FormatError : public Error {
public:
    using Error::Error;
};

/// Contradictory data (same event id with different payloads, ...).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// Filesystem trouble.
class IoError : public Error {
public:
    using Error::Error;
};

/// Reference to an entity the log does not contain.
class LookupError : public Error {
public:
    using Error::Error;
};

/// Argument outside its documented domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Parameter set rejected before any work started.
class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace mvp
