#pragma once

#include <utility>
#include <vector>

#include "newton/rational.hpp"

namespace newton {

/// Dense univariate polynomial with exact rational coefficients,
/// stored by ascending power of x. Immutable after construction.
class Polynomial {
public:
    Polynomial() : c_{Rat(0)} {}  // zero polynomial

    static Polynomial from_coeffs(std::vector<Rat> coeffs);
    static Polynomial constant(const Rat& v) { return from_coeffs({v}); }
    static Polynomial monomial(const Rat& v, int power);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }
    const std::vector<Rat>& coeffs() const { return c_; }
    // coefficient of x^k; 0 outside the stored range
    const Rat& operator[](int k) const;
    const Rat& leading() const { return c_.back(); }

    Rat evaluate(const Rat& x) const;
    Polynomial derivative() const;
    Polynomial nth_derivative(int order) const;
    Polynomial reciprocal() const;             // x^n p(1/x)
    Polynomial shift(const Rat& beta) const;   // p(x + beta), exact Taylor shift
    Polynomial negate_arg() const;             // p(-x)
    // multiply by positive rational to get integer coefficients with content 1
    Polynomial sign_normalized() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial&, const Polynomial&);
    friend Polynomial operator-(const Polynomial&, const Polynomial&);
    friend Polynomial operator*(const Polynomial&, const Polynomial&);
    friend Polynomial operator*(const Rat&, const Polynomial&);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<Rat> c_;
};

struct DivRem {
    Polynomial quotient;
    Polynomial remainder;
};
DivRem divrem(const Polynomial& a, const Polynomial& b);

Polynomial gcd(const Polynomial& a, const Polynomial& b);  // monic
Polynomial square_free_part(const Polynomial& p);          // p / gcd(p, p')
// Yun decomposition: result[i] collects the roots of multiplicity i+1.
std::vector<Polynomial> yun_square_free(const Polynomial& p);

// p[j] = sum of j-th powers of the roots, j = 0..J, by Newton's identities.
std::vector<Rat> power_sums(const Polynomial& p, int J);
// sum over i > j of (root_i - root_j)^2, via n*p2 - p1^2
Rat sum_squared_root_differences(const Polynomial& p);

/// Newton coefficients a_k with coefficient of x^k equal to C(n,k) * a_k.
struct BinomialForm {
    std::vector<Rat> a;  // a[0..n]

    int degree() const { return static_cast<int>(a.size()) - 1; }
    static BinomialForm of(const Polynomial& p);  // rejects the zero polynomial
    Polynomial to_polynomial() const;
    // Rosset's normalized symmetric functions: E_k = (-1)^k a_{n-k}
    Rat rosset_e(int k) const;
};

struct Regularized {
    Polynomial poly;
    Rat beta;  // single accumulated shift: poly(x) = input(x + beta)
};

// True when all n+1 coefficients and all interior quadratic elements
// A_1..A_{n-1} of the binomial form are nonzero.
bool is_regular(const Polynomial& p);
// Deterministic trial ladder of shifts until is_regular holds.
Regularized regularize(const Polynomial& p);

}  // namespace newton
