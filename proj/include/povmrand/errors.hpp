#pragma once

#include <stdexcept>
#include <string>

namespace povmrand {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct NotPsdError : Error {
    using Error::Error;
};

struct DegenerateError : Error {
    using Error::Error;
};

struct NotIcError : Error {
    using Error::Error;
};

struct ConvergenceError : Error {
    ConvergenceError(const std::string& what, double residual)
        : Error(what), residual(residual) {}
    double residual;
};

struct InvalidInputError : Error {
    using Error::Error;
};

}  // namespace povmrand
