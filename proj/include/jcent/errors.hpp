#pragma once

#include <stdexcept>
#include <string>

namespace jcent {

// Numerical failures map to CLI exit code 3, usage/config failures to 2.

struct TailMassError : std::runtime_error {
    explicit TailMassError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct NormalizationError : std::runtime_error {
    explicit NormalizationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonHermitianError : std::runtime_error {
    explicit NonHermitianError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NegativeEigenvalueError : std::runtime_error {
    explicit NegativeEigenvalueError(const std::string& msg) : std::runtime_error(msg) {}
};

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigParseError : std::runtime_error {
    explicit ConfigParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace jcent
