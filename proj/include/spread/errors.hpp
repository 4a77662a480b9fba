// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace spread {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Inputs outside a function's mathematical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

// Bad numerical configuration (step sizes, path counts, grid sizes).
class ConfigError : public Error {
public:
    using Error::Error;
};

// A requested tolerance could not be met.
class AccuracyError : public Error {
public:
    using Error::Error;
};

// Iterative solver gave up. Carries the best point seen.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double theta, double d, double value, double residual)
        : Error(what), theta(theta), d(d), value(value), residual(residual) {}

    double theta;
    double d;
    double value;
    double residual;
};

}  // namespace spread
