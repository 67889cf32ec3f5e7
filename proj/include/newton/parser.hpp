#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "newton/polynomial.hpp"

namespace newton {

struct ParseDiagnostic {
    std::size_t position = 0;
    std::string message;
    enum class Severity { Error, Warning } severity = Severity::Error;
};

struct ParseError : std::runtime_error {
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          diagnostic{position, message, ParseDiagnostic::Severity::Error} {}
    ParseDiagnostic diagnostic;
};

// Sums of terms `[sign] [coeff] ['x' ['^' power]]`; coeff is an integer,
// a/b rational, or finite decimal (converted exactly); implicit
// multiplication allowed; like terms combined; whitespace ignored.
Polynomial parse_polynomial(const std::string& text);

/// Univariate polynomial whose coefficients are polynomials (degree <= 3)
/// in a single rational parameter.
struct ParametricPolynomial {
    std::vector<Polynomial> coeffs;  // coefficient k is a polynomial in the parameter
    std::string variable;
    std::string parameter;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Polynomial instantiate(const Rat& value) const;
};

ParametricPolynomial parse_parametric(const std::string& text, const std::string& param);

std::string to_string(const Polynomial& p, const std::string& var = "x");

}  // namespace newton
