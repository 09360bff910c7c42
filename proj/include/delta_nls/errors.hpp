#pragma once

#include <stdexcept>
#include <string>

namespace delta_nls {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "error"; }
};

/// Argument outside the domain of a mathematical operation.
class DomainError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "domain"; }
};

/// Invalid configuration value or combination of values.
class ConfigError : public Error {
public:
    ConfigError(std::string key, const std::string& what)
        : Error(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}
    const std::string& key() const noexcept { return key_; }
    const char* kind() const noexcept override { return "config"; }

private:
    std::string key_;
};

/// API misuse, e.g. combining fields that live on different grids.
class UsageError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "usage"; }
};

/// The Nehari ray through a state cannot be projected (B + 2 beta C == 0).
class DegenerateRayError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "degenerate_ray"; }
};

/// A bisection bracket does not straddle the predicate.
class BracketError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "bracket"; }
};

/// The shooting oracle could not bracket or resolve the ground state.
class OracleError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "oracle"; }
};

/// Reading or writing a file failed.
class IoError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "io"; }
};

} // namespace delta_nls
