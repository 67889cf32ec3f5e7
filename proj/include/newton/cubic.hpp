#pragma once

#include <string>
#include <utility>
#include <vector>

#include "newton/elements.hpp"
#include "newton/polynomial.hpp"

namespace newton {

/// Binomial-coefficient quadruple (a_{m+3}, a_{m+2}, a_{m+1}, a_m) of the
/// parent polynomial; the sector cubic is c3 x^3 + 3 c2 x^2 + 3 c1 x + c0.
/// The overall n!/3! factor is dropped: it changes neither signs nor roots.
struct CubicSector {
    Rat c3, c2, c1, c0;
    int index = 0;  // m, position of the low coefficient in the parent

    Rat b1() const { return c1 * c1 - c0 * c2; }  // parent's A_{m+1}
    Rat b2() const { return c2 * c2 - c1 * c3; }  // parent's A_{m+2}
    Polynomial to_polynomial() const;
    CubicSector reciprocal() const { return {c0, c1, c2, c3, index}; }
};

/// Closed interval [(u - 2 A^{3/2})/d, (u + 2 A^{3/2})/d]; empty when A < 0,
/// a single point u/d when A = 0. Membership is decided all-rationally.
struct PrescribedInterval {
    Rat u;
    Rat A;
    Rat d;  // strictly positive (square of a nonzero coefficient)

    bool empty() const { return A < 0; }
    bool degenerate() const { return A == 0; }
    // rational outer bracket of the endpoints, each within tol
    std::pair<Rat, Rat> bracket(const Rat& tol) const;
    // outward-rounded decimal endpoints ("empty" when A < 0)
    std::pair<std::string, std::string> decimal_endpoints(unsigned digits) const;
};

enum class IntervalSide { Low, High };

enum class CubicRootClass {
    ThreeRealDistinct,
    ThreeRealWithDouble,
    TripleRoot,
    OneRealOneComplexPair
};

// The n-2 overlapping cubic sectors, m = 0..n-3. Degree >= 3.
std::vector<CubicSector> cubic_sectors(const BinomialForm& bf);

// Low side: interval for the adjacent coefficient c0, built from B2 over c3^2.
// High side: interval for c3, built from B1 over c0^2.
PrescribedInterval prescribed_interval(const CubicSector& s, IntervalSide side);

// Exact: membership iff A >= 0 and (v*d - u)^2 <= 4 A^3.
bool interval_contains(const PrescribedInterval& iv, const Rat& v);

// Root structure of the sector cubic; agrees with the discriminant sign.
CubicRootClass classify_cubic(const CubicSector& s);
bool has_three_real_roots(CubicRootClass c);

// Fill in truly/falsely positive status for every interior positive element.
// Requires a regularized input of degree >= 3.
ElementTable classify_elements(const BinomialForm& bf);

// Prescribed interval of the adjacent coefficient on the given side of
// interior quadratic element A_j (side Low = a_{j-2}, High = a_{j+2}).
PrescribedInterval adjacent_interval(const BinomialForm& bf, int j, IntervalSide side);

}  // namespace newton
