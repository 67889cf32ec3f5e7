#pragma once

#include <stdexcept>
#include <string>

namespace newton {

struct AnalysisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Entry point was given the identically-zero polynomial.
struct ZeroPolynomialError : AnalysisError {
    ZeroPolynomialError() : AnalysisError("zero polynomial rejected") {}
};

// A zero sign appeared where the caller must regularize first.
struct NotRegularizedError : AnalysisError {
    explicit NotRegularizedError(const std::string& what)
        : AnalysisError(what + " (regularize the polynomial first)") {}
};

struct DegreeError : AnalysisError {
    using AnalysisError::AnalysisError;
};

}  // namespace newton
