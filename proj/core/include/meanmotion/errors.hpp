#pragma once

#include <stdexcept>
#include <string>

namespace meanmotion {

// Bad input: violated precondition, malformed file, out-of-range parameter.
// Maps to CLI exit code 2.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// The inputs were legal but a numerical procedure could not deliver its
// contract (non-convergence, unreachable tolerance, overflow).
// Maps to CLI exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Quadrature gave up before reaching the requested tolerance.  Carries the
// best value computed so far and the residual error bound at that point.
class QuadratureError : public NumericalError {
public:
    QuadratureError(const std::string& what, double best_value, double residual)
        : NumericalError(what), best_value(best_value), residual(residual) {}

    double best_value;
    double residual;
};

}  // namespace meanmotion
