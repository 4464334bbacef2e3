// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace bkmd {

// Caller broke a documented precondition (wrong representation tag,
// out-of-range argument, ...).
struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Input data violates an invariant that is checked at runtime
// (non-Hermitian spectrum, non-solenoidal field, ...).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Bad configuration text; message carries the offending line number.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed checkpoint or input file.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bkmd
