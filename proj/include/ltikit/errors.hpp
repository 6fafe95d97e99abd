#pragma once

#include <stdexcept>
#include <string>

namespace ltikit {

// Precondition violated by the caller (bad sizes, out-of-range parameters).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Operation undefined at the requested point (evaluation at a pole, zero norm).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Input data that cannot be represented (NaN/inf samples, malformed files).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Numerical failure: singular systems, root finder residuals, overflow.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structurally valid input the algorithm does not handle (repeated poles).
class UnsupportedStructure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ltikit
