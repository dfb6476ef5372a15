#pragma once

#include <stdexcept>
#include <string>

namespace specbound {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad arguments, malformed input files, contradictory flags. CLI exit code 2.
class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error(what) {}
};

// Failures that depend on the data or the run: singular factorizations,
// guard violations, non-convergence. CLI exit code 1.
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what) : Error(what) {}
};

class NonHermitianFieldError : public NumericalError {
public:
    NonHermitianFieldError(const std::string& what, double imag_magnitude)
        : NumericalError(what), imag_magnitude(imag_magnitude) {}
    double imag_magnitude;
};

class SingularSystemError : public NumericalError {
public:
    SingularSystemError(const std::string& what, std::string factorization)
        : NumericalError(what), factorization(std::move(factorization)) {}
    std::string factorization;
};

class QuadratureError : public NumericalError {
public:
    QuadratureError(const std::string& what, double achieved_error)
        : NumericalError(what), achieved_error(achieved_error) {}
    double achieved_error;
};

}  // namespace specbound
