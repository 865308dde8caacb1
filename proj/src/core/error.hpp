#pragma once

#include <stdexcept>
#include <string>

namespace l4p {

// Exception taxonomy. The C API maps these onto its error codes, and the
// CLI maps those onto process exit codes (0 ok, 2 usage/validation,
// 3 missing prerequisite, 4 I/O).

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad configuration: invalid dimensions, divisibility violations, unknown keys.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Bad runtime input: shape mismatch, out-of-bounds query, non-positive depth.
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// API misuse: requesting a head that was never built, cardinality mismatch.
struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

// Numerically degenerate problem: collinear points, rank-deficient rays.
struct DegeneracyError : Error {
    explicit DegeneracyError(const std::string& msg) : Error(msg) {}
};

// A required artifact (checkpoint, corpus) is missing.
struct PrereqError : Error {
    explicit PrereqError(const std::string& msg) : Error(msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace l4p
