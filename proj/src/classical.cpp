#include "newton/classical.hpp"

#include <algorithm>
#include <deque>

#include "newton/errors.hpp"

namespace newton {

namespace {

int variations(const std::vector<Sign>& signs) {
    int count = 0;
    Sign prev = Sign::Zero;
    for (Sign s : signs) {
        if (s == Sign::Zero) continue;
        if (prev != Sign::Zero && s != prev) ++count;
        prev = s;
    }
    return count;
}

int coefficient_variations(const Polynomial& p) {
    std::vector<Sign> signs;
    signs.reserve(p.coeffs().size());
    for (const Rat& c : p.coeffs()) signs.push_back(sign_of(c));
    return variations(signs);
}

}  // namespace

int descartes_positive(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomialError();
    return coefficient_variations(p);
}

int descartes_negative(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomialError();
    return coefficient_variations(p.negate_arg());
}

std::vector<Sign> fourier_signs(const Polynomial& p, const Rat& x) {
    std::vector<Sign> out;
    Polynomial d = p;
    for (int k = 0; k <= p.degree(); ++k) {
        out.push_back(sign_of(d.evaluate(x)));
        d = d.derivative();
    }
    return out;
}

int fourier_bound(const Polynomial& p, const Rat& q, const Rat& r) {
    if (!(q < r)) throw AnalysisError("fourier_bound: q < r required");
    return variations(fourier_signs(p, q)) - variations(fourier_signs(p, r));
}

SturmChain SturmChain::of(const Polynomial& p) {
    SturmChain s;
    s.chain.push_back(p);
    if (p.degree() == 0) return s;
    s.chain.push_back(p.derivative());
    while (s.chain.back().degree() > 0) {
        const Polynomial& a = s.chain[s.chain.size() - 2];
        const Polynomial& b = s.chain.back();
        Polynomial r = divrem(a, b).remainder;
        if (r.is_zero()) break;
        // scaling by a positive rational keeps signs and tames growth
        s.chain.push_back((-r).sign_normalized());
    }
    return s;
}

int SturmChain::variations_at(const Rat& x) const {
    std::vector<Sign> signs;
    signs.reserve(chain.size());
    for (const Polynomial& q : chain) signs.push_back(sign_of(q.evaluate(x)));
    return variations(signs);
}

int SturmChain::variations_at_infinity(int direction) const {
    std::vector<Sign> signs;
    signs.reserve(chain.size());
    for (const Polynomial& q : chain) {
        int s = sgn(q.leading());
        if (direction < 0 && q.degree() % 2 == 1) s = -s;
        signs.push_back(static_cast<Sign>(s));
    }
    return variations(signs);
}

namespace {

int chain_variations(const SturmChain& c, const Bound& b) {
    switch (b.kind) {
        case Bound::NegInf: return c.variations_at_infinity(-1);
        case Bound::PosInf: return c.variations_at_infinity(+1);
        case Bound::Finite: return c.variations_at(b.value);
    }
    return 0;
}

bool bound_less(const Bound& a, const Bound& b) {
    if (a.kind == Bound::NegInf) return b.kind != Bound::NegInf;
    if (a.kind == Bound::PosInf) return false;
    if (b.kind == Bound::PosInf) return true;
    if (b.kind == Bound::NegInf) return false;
    return a.value < b.value;
}

}  // namespace

int sturm_count(const Polynomial& p, const Bound& q, const Bound& r) {
    if (p.is_zero()) throw ZeroPolynomialError();
    if (!bound_less(q, r)) throw AnalysisError("sturm_count: q < r required");
    if (p.degree() == 0) return 0;
    SturmChain chain = SturmChain::of(square_free_part(p));
    return chain_variations(chain, q) - chain_variations(chain, r);
}

RootCounts count_real_roots(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomialError();
    RootCounts rc;
    for (int k = 0; k <= p.degree(); ++k) {
        if (p[k] != 0) break;
        ++rc.at_zero;
    }
    if (p.degree() == 0) return rc;
    std::vector<Polynomial> factors = yun_square_free(p);
    Bound zero = Bound::at(Rat(0));
    for (size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() == 0) continue;
        SturmChain chain = SturmChain::of(factors[i]);
        int pos = chain.variations_at(Rat(0)) - chain.variations_at_infinity(+1);
        int neg_incl_zero = chain.variations_at_infinity(-1) - chain.variations_at(Rat(0));
        int neg = neg_incl_zero - (factors[i].evaluate(Rat(0)) == 0 ? 1 : 0);
        rc.positive += static_cast<int>(i + 1) * pos;
        rc.negative += static_cast<int>(i + 1) * neg;
        rc.distinct_positive += pos;
        rc.distinct_negative += neg;
    }
    (void)zero;
    return rc;
}

Rat cauchy_root_bound(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomialError();
    Rat m = 0;
    for (int k = 0; k < p.degree(); ++k) m = std::max(m, rat_abs(p[k] / p.leading()));
    return m + 1;
}

std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p, const Rat& width) {
    if (p.is_zero()) throw ZeroPolynomialError();
    if (width <= 0) throw AnalysisError("isolate_real_roots: width must be positive");
    std::vector<IsolatingInterval> out;
    if (p.degree() == 0) return out;
    Polynomial f = square_free_part(p);
    SturmChain chain = SturmChain::of(f);
    Rat m = cauchy_root_bound(f);
    std::deque<std::pair<Rat, Rat>> work{{-m, m}};
    while (!work.empty()) {
        auto [lo, hi] = work.front();
        work.pop_front();
        int count = chain.variations_at(lo) - chain.variations_at(hi);
        if (count == 0) continue;
        if (count == 1 && hi - lo < width) {
            out.push_back({lo, hi, 1});
            continue;
        }
        Rat mid = (lo + hi) / 2;
        work.emplace_back(lo, mid);
        work.emplace_back(mid, hi);
    }
    std::sort(out.begin(), out.end(),
              [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
    // multiplicities from the gcd cascade
    std::vector<Polynomial> factors = yun_square_free(p);
    for (IsolatingInterval& iv : out)
        for (size_t i = 0; i < factors.size(); ++i) {
            if (factors[i].degree() == 0) continue;
            if (sturm_count(factors[i], Bound::at(iv.lo), Bound::at(iv.hi)) == 1) {
                iv.multiplicity = static_cast<int>(i + 1);
                break;
            }
        }
    return out;
}

namespace {

// fraction-free Bareiss determinant over the integers
Int bareiss_det(std::vector<std::vector<Int>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

}  // namespace

Rat resultant(const Polynomial& A, const Polynomial& B) {
    if (A.is_zero() || B.is_zero()) throw ZeroPolynomialError();
    const int n = A.degree(), m = B.degree();
    const int size = n + m;
    if (size == 0) return 1;
    // rational entries: scale each row to integers and divide the
    // determinant by the accumulated factor afterwards
    std::vector<std::vector<Rat>> s(size, std::vector<Rat>(size, Rat(0)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[i][i + j] = A[n - j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[m + i][i + j] = B[m - j];
    Rat factor = 1;
    std::vector<std::vector<Int>> mi(size, std::vector<Int>(size));
    for (int i = 0; i < size; ++i) {
        Int den = 1;
        for (int j = 0; j < size; ++j) den = lcm(den, denominator(s[i][j]));
        factor *= Rat(den);
        for (int j = 0; j < size; ++j) {
            Rat v = s[i][j] * Rat(den);
            mi[i][j] = numerator(v);
        }
    }
    return Rat(bareiss_det(std::move(mi))) / factor;
}

Rat discriminant(const Polynomial& p) {
    const int n = p.degree();
    if (n < 2) throw DegreeError("discriminant: degree >= 2 required");
    Rat r = resultant(p, p.derivative());
    Rat d = r / p.leading();
    return (n * (n - 1) / 2) % 2 ? Rat(-d) : d;
}

ComplexCountConstraint discriminant_interpretation(const Rat& delta, int n) {
    ComplexCountConstraint c;
    if (delta == 0) {
        c.repeated_root = true;
        return c;
    }
    int start = delta > 0 ? 0 : 2;
    for (int k = start; k <= n; k += 4) c.allowed_complex_counts.push_back(k);
    return c;
}

namespace {

// Horner evaluation of p over the interval [xlo, xhi]
std::pair<Rat, Rat> interval_evaluate(const Polynomial& p, const Rat& xlo, const Rat& xhi) {
    Rat lo = p.leading(), hi = p.leading();
    for (int k = p.degree() - 1; k >= 0; --k) {
        Rat a = lo * xlo, b = lo * xhi, c = hi * xlo, d = hi * xhi;
        lo = std::min(std::min(a, b), std::min(c, d)) + p[k];
        hi = std::max(std::max(a, b), std::max(c, d)) + p[k];
    }
    return {lo, hi};
}

}  // namespace

std::vector<PrivilegedFreeTerm> privileged_free_terms(const Polynomial& p, unsigned digits) {
    if (p.degree() < 2) throw DegreeError("privileged_free_terms: degree >= 2 required");
    Polynomial dp = p.derivative();
    std::vector<IsolatingInterval> stationary = isolate_real_roots(dp, Rat(1));
    Polynomial fsq = square_free_part(dp);
    SturmChain chain = SturmChain::of(fsq);
    Rat tol = Rat(1) / Rat(pow10(digits + 2));
    std::vector<PrivilegedFreeTerm> out;
    for (const IsolatingInterval& iv : stationary) {
        Rat lo = iv.lo, hi = iv.hi;
        // free term of p(x) - p(mu): alpha_0 - p(mu), certified by interval
        // evaluation over a shrinking bracket of mu
        for (int iter = 0; iter < 4096; ++iter) {
            auto [vlo, vhi] = interval_evaluate(p, lo, hi);
            if (vhi - vlo <= tol) {
                PrivilegedFreeTerm t;
                t.lo = p[0] - vhi;
                t.hi = p[0] - vlo;
                t.display = decimal_string((t.lo + t.hi) / 2, digits, Round::Nearest);
                out.push_back(std::move(t));
                break;
            }
            Rat mid = (lo + hi) / 2;
            if (chain.variations_at(lo) - chain.variations_at(mid) == 1)
                hi = mid;
            else
                lo = mid;
        }
    }
    std::sort(out.begin(), out.end(), [](const PrivilegedFreeTerm& a, const PrivilegedFreeTerm& b) {
        return a.lo + a.hi > b.lo + b.hi;
    });
    return out;
}

}  // namespace newton
