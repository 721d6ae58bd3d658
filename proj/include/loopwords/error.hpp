#pragma once

#include <stdexcept>
#include <string>

namespace loopwords {

// Invalid type/rank, malformed order or weights.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The operation is not defined for the active order mode.
class UnsupportedOperation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Two independent computations that must agree did not.
class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The bounded oracle alphabet holds no nonvanishing Lyndon word of the requested degree.
class WindowExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Greedy extraction met a smallest remaining root that is not a simple affine root.
class NotReducedOrder : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace loopwords
