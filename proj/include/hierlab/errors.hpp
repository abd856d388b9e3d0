#pragma once

#include <stdexcept>
#include <string>

namespace hierlab {

// Raised when a requested object would exceed the configured size guards
// (particle count, one-particle dimension, enumeration size). Guards exist so
// a bad config produces a structured error instead of exhausting memory.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised for malformed arguments (non-increasing label sets, dimension
// mismatches, non-Hermitian inputs where Hermiticity is required, ...).
class argument_error : public std::invalid_argument {
public:
    explicit argument_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace hierlab
