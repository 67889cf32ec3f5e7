#pragma once

#include <string>
#include <vector>

#include "newton/elements.hpp"
#include "newton/polynomial.hpp"

namespace newton {

int descartes_positive(const Polynomial& p);
int descartes_negative(const Polynomial& p);

// Signs of {p, p', ..., p^(n)} at x.
std::vector<Sign> fourier_signs(const Polynomial& p, const Rat& x);
// variations(S(q)) - variations(S(r)); zeros skipped. Requires q < r.
int fourier_bound(const Polynomial& p, const Rat& q, const Rat& r);

/// Signed remainder chain p, p', -rem(...), ... down to a constant.
struct SturmChain {
    std::vector<Polynomial> chain;

    static SturmChain of(const Polynomial& p);
    int variations_at(const Rat& x) const;
    int variations_at_infinity(int direction) const;  // -1 or +1
};

/// Interval endpoint that may be infinite.
struct Bound {
    enum Kind { NegInf, Finite, PosInf } kind = Finite;
    Rat value;

    static Bound neg_inf() { return {NegInf, Rat(0)}; }
    static Bound pos_inf() { return {PosInf, Rat(0)}; }
    static Bound at(Rat v) { return {Finite, std::move(v)}; }
};

// Distinct real roots of p in the half-open interval (q, r]. Counting is
// done on the square-free part, so multiple roots count once.
int sturm_count(const Polynomial& p, const Bound& q, const Bound& r);

struct RootCounts {
    int positive = 0;   // with multiplicity
    int negative = 0;   // with multiplicity
    int at_zero = 0;    // multiplicity of the root x = 0
    int distinct_positive = 0;
    int distinct_negative = 0;
};
RootCounts count_real_roots(const Polynomial& p);

// 1 + max |alpha_i / alpha_n|; every real root lies in (-bound, bound)
Rat cauchy_root_bound(const Polynomial& p);

struct IsolatingInterval {
    Rat lo, hi;  // root in (lo, hi]
    int multiplicity = 1;
};
// Pairwise disjoint intervals, one distinct real root each, each narrower
// than width; deterministic midpoint bisection.
std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p, const Rat& width);

// Determinant of the Sylvester matrix, rows of A first. Res(x-a, x-b) = a-b.
Rat resultant(const Polynomial& A, const Polynomial& B);
// (-1)^{n(n-1)/2} Res(p, p') / lc(p); degree >= 2
Rat discriminant(const Polynomial& p);

struct ComplexCountConstraint {
    std::vector<int> allowed_complex_counts;  // empty iff repeated_root
    bool repeated_root = false;
};
ComplexCountConstraint discriminant_interpretation(const Rat& delta, int n);

/// Free term of p(x) - p(mu_i) for a stationary point mu_i: the member of
/// the constant-shift family with a double root there.
struct PrivilegedFreeTerm {
    Rat lo, hi;           // certified rational bracket of the value
    std::string display;  // decimal, rounded from the bracket midpoint
};
// One entry per distinct real root of p', sorted descending; empty when p'
// has no real roots.
std::vector<PrivilegedFreeTerm> privileged_free_terms(const Polynomial& p, unsigned digits);

}  // namespace newton
