// errors.hpp: exception types shared by the coldeph modules

#pragma once

#include <stdexcept>
#include <string>

namespace coldeph {

// A tolerance-checked numerical invariant (Hermiticity, PSD, trace,
// concurrence range) was violated.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid run configuration: unknown key or state name, malformed value.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// The configuration file could not be read.
class ConfigUnreadable : public std::runtime_error {
public:
    explicit ConfigUnreadable(const std::string& what) : std::runtime_error(what) {}
};

// An output file (CSV or report) could not be written.
class OutputError : public std::runtime_error {
public:
    explicit OutputError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace coldeph
