#pragma once

#include <stdexcept>
#include <string>

namespace specrisk {

// Error taxonomy mapped to CLI exit codes: config 1, data 2, solver 3.
// Parameter / precondition violations use std::invalid_argument directly.

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace specrisk
