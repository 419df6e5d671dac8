#pragma once

#include <stdexcept>
#include <string>

namespace monopoly {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact linear algebra / domain analysis.
struct SingularMatrixError : Error {
    using Error::Error;
};
struct NotBoundedError : Error {
    using Error::Error;
};

// Measure / integration layer.
struct DomainError : Error {
    using Error::Error;
};
struct RangeError : Error {
    using Error::Error;
};
struct ZeroDirectionError : Error {
    using Error::Error;
};
struct QuadratureError : Error {
    using Error::Error;
};

// Series construction.
struct TruncationTooSmallError : Error {
    using Error::Error;
};
struct HypothesisViolatedError : Error {
    using Error::Error;
};
struct UnsupportedSetError : Error {
    using Error::Error;
};

// Estimators.
struct NonIntegrableError : Error {
    using Error::Error;
};
struct NonConvergentError : Error {
    using Error::Error;
};
struct TrivialDomainError : Error {
    using Error::Error;
};

// CLI / config handling.
struct ConfigError : Error {
    using Error::Error;
};

} // namespace monopoly
