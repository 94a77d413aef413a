#pragma once

#include <stdexcept>
#include <string>

namespace ptorsion {

/// Malformed textual input (partition strings, manifest entries).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A polynomial was requested in fewer variables than its shape needs.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Division by a vanishing factor or evaluation at a pole.
class SingularityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Two values carrying different formal parameters were combined.
class ParameterMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact evaluation requested where only the floating entry point applies.
class ModeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A brute-force computation would exceed its configured bound.
class ResourceLimitError : public std::runtime_error {
public:
    ResourceLimitError(std::string bound, std::string detail)
        : std::runtime_error(bound + ": " + detail), bound_(std::move(bound)) {}

    /// Name of the configured bound that was hit, e.g. "max_group_order".
    const std::string& bound() const noexcept { return bound_; }

private:
    std::string bound_;
};

} // namespace ptorsion
