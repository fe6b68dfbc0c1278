#pragma once

#include <stdexcept>
#include <string>

namespace pfolio {

// Invalid grids, method parameters, infeasible settings. CLI exit code 1.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent run data. CLI exit code 2.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Search space or player count above a hard cap; refusal, not truncation. CLI exit code 3.
struct CapError : std::runtime_error {
    explicit CapError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pfolio
