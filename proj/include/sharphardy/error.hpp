#pragma once

#include <stdexcept>
#include <string>

namespace sharphardy {

// Base of every failure raised by the library. The CLI maps the two
// families below onto distinct exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid input: bad parameters, regime violations, cone violations,
// points outside a function's domain, unsupported requests. Exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

class ParameterError : public InputError {
public:
    using InputError::InputError;
};

class DomainError : public InputError {
public:
    using InputError::InputError;
};

class ConeError : public InputError {
public:
    using InputError::InputError;
};

class UnsupportedCase : public InputError {
public:
    using InputError::InputError;
};

// Numerical trouble: a divergent integral or a quadrature that did not
// reach its tolerance. Exit code 3.
class NumericError : public Error {
public:
    using Error::Error;
};

class DivergenceError : public NumericError {
public:
    using NumericError::NumericError;
};

class NumericalFailure : public NumericError {
public:
    NumericalFailure(const std::string& what, double best_estimate)
        : NumericError(what), best_estimate_(best_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }

private:
    double best_estimate_;
};

}  // namespace sharphardy
