#include "newton/cubic.hpp"

#include "newton/errors.hpp"

namespace newton {

Polynomial CubicSector::to_polynomial() const {
    return Polynomial::from_coeffs({c0, Rat(3) * c1, Rat(3) * c2, c3});
}

std::vector<CubicSector> cubic_sectors(const BinomialForm& bf) {
    const int n = bf.degree();
    if (n < 3) throw DegreeError("cubic_sectors: degree >= 3 required");
    std::vector<CubicSector> out;
    out.reserve(n - 2);
    for (int m = 0; m <= n - 3; ++m)
        out.push_back({bf.a[m + 3], bf.a[m + 2], bf.a[m + 1], bf.a[m], m});
    return out;
}

PrescribedInterval prescribed_interval(const CubicSector& s, IntervalSide side) {
    if (side == IntervalSide::Low) {
        if (s.c3 == 0)
            throw NotRegularizedError("prescribed_interval: zero leading coefficient");
        return {Rat(-3) * s.c2 * s.b2() + s.c2 * s.c2 * s.c2, s.b2(), s.c3 * s.c3};
    }
    if (s.c0 == 0)
        throw NotRegularizedError("prescribed_interval: zero free coefficient");
    return {Rat(-3) * s.c1 * s.b1() + s.c1 * s.c1 * s.c1, s.b1(), s.c0 * s.c0};
}

bool interval_contains(const PrescribedInterval& iv, const Rat& v) {
    if (iv.A < 0) return false;
    Rat t = v * iv.d - iv.u;
    return t * t <= Rat(4) * iv.A * iv.A * iv.A;
}

std::pair<Rat, Rat> PrescribedInterval::bracket(const Rat& tol) const {
    if (A < 0) throw AnalysisError("bracket: empty prescribed interval");
    auto [slo, shi] = sqrt_bracket(Rat(4) * A * A * A, tol * d / 2);
    return {(u - shi) / d, (u + shi) / d};
}

std::pair<std::string, std::string> PrescribedInterval::decimal_endpoints(unsigned digits) const {
    if (A < 0) return {"empty", "empty"};
    Rat tol = Rat(1) / Rat(pow10(digits + 3));
    auto [lo, hi] = bracket(tol);
    return {decimal_string(lo, digits, Round::Floor), decimal_string(hi, digits, Round::Ceil)};
}

CubicRootClass classify_cubic(const CubicSector& s) {
    if (s.c3 == 0) throw DegreeError("classify_cubic: leading coefficient must be nonzero");
    Rat B2 = s.b2();
    if (B2 < 0) return CubicRootClass::OneRealOneComplexPair;
    if (B2 == 0)
        return s.c0 * s.c3 * s.c3 == s.c2 * s.c2 * s.c2 ? CubicRootClass::TripleRoot
                                                        : CubicRootClass::OneRealOneComplexPair;
    PrescribedInterval iv = prescribed_interval(s, IntervalSide::Low);
    Rat t = s.c0 * iv.d - iv.u;
    Rat lhs = t * t, rhs = Rat(4) * B2 * B2 * B2;
    if (lhs < rhs) return CubicRootClass::ThreeRealDistinct;
    if (lhs == rhs) return CubicRootClass::ThreeRealWithDouble;
    return CubicRootClass::OneRealOneComplexPair;
}

bool has_three_real_roots(CubicRootClass c) {
    return c != CubicRootClass::OneRealOneComplexPair;
}

PrescribedInterval adjacent_interval(const BinomialForm& bf, int j, IntervalSide side) {
    const int n = bf.degree();
    if (j < 1 || j > n - 1) throw AnalysisError("adjacent_interval: interior index required");
    Rat Aj = bf.a[j] * bf.a[j] - bf.a[j - 1] * bf.a[j + 1];
    Rat u = Rat(-3) * bf.a[j] * Aj + bf.a[j] * bf.a[j] * bf.a[j];
    if (side == IntervalSide::Low) {
        // interval for a_{j-2}, denominator a_{j+1}^2
        if (j < 2) throw AnalysisError("adjacent_interval: A_1 has no low-side coefficient");
        if (bf.a[j + 1] == 0)
            throw NotRegularizedError("adjacent_interval: zero coefficient a_" +
                                      std::to_string(j + 1));
        return {u, Aj, bf.a[j + 1] * bf.a[j + 1]};
    }
    // interval for a_{j+2}, denominator a_{j-1}^2
    if (j > n - 2) throw AnalysisError("adjacent_interval: A_{n-1} has no high-side coefficient");
    if (bf.a[j - 1] == 0)
        throw NotRegularizedError("adjacent_interval: zero coefficient a_" + std::to_string(j - 1));
    return {u, Aj, bf.a[j - 1] * bf.a[j - 1]};
}

ElementTable classify_elements(const BinomialForm& bf) {
    const int n = bf.degree();
    if (n < 3) throw DegreeError("classify_elements: degree >= 3 required");
    ElementTable t = quadratic_elements(bf);
    for (int m = 0; m <= n; ++m)
        if (t.simple_signs[m] == Sign::Zero ||
            (m > 0 && m < n && t.quadratic_signs[m] == Sign::Zero))
            throw NotRegularizedError("classify_elements: zero element at index " +
                                      std::to_string(m));
    for (int j = 1; j <= n - 1; ++j) {
        if (t.status[j] != ElementStatus::TrulyPositive) continue;
        bool truly = true;
        if (j >= 2 && !interval_contains(adjacent_interval(bf, j, IntervalSide::Low), bf.a[j - 2]))
            truly = false;
        if (j <= n - 2 &&
            !interval_contains(adjacent_interval(bf, j, IntervalSide::High), bf.a[j + 2]))
            truly = false;
        if (!truly) t.status[j] = ElementStatus::FalselyPositive;
    }
    return t;
}

}  // namespace newton
