#pragma once

#include <stdexcept>
#include <string>

namespace frane {

/// Raised for invalid inputs or pipeline failures. The CLI maps it to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised for invalid option values that can only be detected after parsing
/// (for example n' larger than the feature count). The CLI maps it to exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace frane
