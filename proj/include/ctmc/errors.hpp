#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace ctmc {

// Base class for all library errors. code() is a stable kebab-case
// identifier meant for programmatic matching; what() carries the human
// readable message including the location of the offending input.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Malformed input: unreadable file, invalid JSON, schema violation.
class ParseError : public Error {
public:
    using Error::Error;
};

// The document parses but the model (or a request on it) is invalid:
// semantic document errors, classification errors, bad parameters.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Numerical failure: singular system, residual above tolerance.
// Carries the residual achieved when one is known.
class NumericalError : public Error {
public:
    NumericalError(std::string code, const std::string& message,
                   double residual = std::numeric_limits<double>::quiet_NaN())
        : Error(std::move(code), message), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

}  // namespace ctmc
