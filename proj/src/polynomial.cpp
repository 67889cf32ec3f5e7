#include "newton/polynomial.hpp"

#include <algorithm>

#include "newton/errors.hpp"

namespace newton {

Polynomial Polynomial::from_coeffs(std::vector<Rat> coeffs) {
    if (coeffs.empty()) throw AnalysisError("from_coeffs: empty coefficient sequence");
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    Polynomial p;
    p.c_ = std::move(coeffs);
    return p;
}

Polynomial Polynomial::monomial(const Rat& v, int power) {
    std::vector<Rat> c(power + 1, Rat(0));
    c[power] = v;
    return from_coeffs(std::move(c));
}

const Rat& Polynomial::operator[](int k) const {
    static const Rat zero(0);
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[k];
}

Rat Polynomial::evaluate(const Rat& x) const {
    Rat acc = c_.back();
    for (int k = degree() - 1; k >= 0; --k) acc = acc * x + c_[k];
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (degree() == 0) return Polynomial();
    std::vector<Rat> d(degree());
    for (int k = 1; k <= degree(); ++k) d[k - 1] = Rat(k) * c_[k];
    return from_coeffs(std::move(d));
}

Polynomial Polynomial::nth_derivative(int order) const {
    Polynomial p = *this;
    for (int i = 0; i < order; ++i) p = p.derivative();
    return p;
}

Polynomial Polynomial::reciprocal() const {
    if (is_zero()) throw ZeroPolynomialError();
    std::vector<Rat> r(c_.rbegin(), c_.rend());
    return from_coeffs(std::move(r));
}

Polynomial Polynomial::shift(const Rat& beta) const {
    // repeated synthetic division by (x - (-beta)); O(n^2) exact
    std::vector<Rat> c = c_;
    const int n = degree();
    for (int k = 0; k < n; ++k)
        for (int j = n - 1; j >= k; --j) c[j] += beta * c[j + 1];
    return from_coeffs(std::move(c));
}

Polynomial Polynomial::negate_arg() const {
    std::vector<Rat> c = c_;
    for (int k = 1; k < static_cast<int>(c.size()); k += 2) c[k] = -c[k];
    return from_coeffs(std::move(c));
}

Polynomial Polynomial::sign_normalized() const {
    if (is_zero()) return *this;
    Int den_lcm = 1, num_gcd = 0;
    for (const Rat& r : c_) {
        Int d = denominator(r);
        den_lcm = lcm(den_lcm, d);
    }
    std::vector<Rat> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * Rat(den_lcm);
    for (const Rat& r : c) num_gcd = gcd(num_gcd, numerator(r));
    if (num_gcd < 0) num_gcd = -num_gcd;
    for (Rat& r : c) r /= Rat(num_gcd);
    return from_coeffs(std::move(c));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rat> c = c_;
    for (Rat& r : c) r = -r;
    return from_coeffs(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial::from_coeffs(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial::from_coeffs(std::move(c));
}

Polynomial operator*(const Rat& s, const Polynomial& p) {
    std::vector<Rat> c = p.c_;
    for (Rat& r : c) r *= s;
    return Polynomial::from_coeffs(std::move(c));
}

DivRem divrem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw AnalysisError("divrem: division by zero polynomial");
    std::vector<Rat> rem = a.coeffs();
    int da = a.degree(), db = b.degree();
    if (da < db || a.is_zero()) return {Polynomial(), a};
    std::vector<Rat> q(da - db + 1, Rat(0));
    for (int k = da; k >= db; --k) {
        Rat f = rem[k] / b.leading();
        if (f == 0) continue;
        q[k - db] = f;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b[j];
    }
    rem.resize(db > 0 ? db : 1);
    if (rem.empty()) rem.push_back(Rat(0));
    return {Polynomial::from_coeffs(std::move(q)), Polynomial::from_coeffs(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = divrem(x, y).remainder;
        x = y;
        y = r.is_zero() ? r : r.sign_normalized();  // keep coefficients small
    }
    if (x.is_zero()) return x;
    return (Rat(1) / x.leading()) * x;  // monic
}

Polynomial square_free_part(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomialError();
    if (p.degree() == 0) return p;
    Polynomial g = gcd(p, p.derivative());
    return divrem(p, g).quotient;
}

std::vector<Polynomial> yun_square_free(const Polynomial& p) {
    std::vector<Polynomial> out;
    if (p.is_zero() || p.degree() == 0) return out;
    Polynomial g = gcd(p, p.derivative());
    Polynomial w = divrem(p, g).quotient;
    while (w.degree() > 0) {
        Polynomial y = gcd(w, g);
        out.push_back(divrem(w, y).quotient);
        w = y;
        if (g.degree() > 0) g = divrem(g, y).quotient;
    }
    return out;
}

std::vector<Rat> power_sums(const Polynomial& p, int J) {
    if (p.is_zero()) throw ZeroPolynomialError();
    const int n = p.degree();
    // elementary symmetric functions: e_i = (-1)^i c[n-i] / c[n]
    std::vector<Rat> e(n + 1);
    e[0] = 1;
    for (int i = 1; i <= n; ++i) e[i] = (i % 2 ? Rat(-1) : Rat(1)) * p[n - i] / p.leading();
    std::vector<Rat> ps(J + 1, Rat(0));
    ps[0] = n;
    for (int k = 1; k <= J; ++k) {
        Rat acc = 0;
        for (int i = 1; i < k && i <= n; ++i)
            acc += (i % 2 ? Rat(1) : Rat(-1)) * e[i] * ps[k - i];
        if (k <= n) acc += (k % 2 ? Rat(1) : Rat(-1)) * Rat(k) * e[k];
        ps[k] = acc;
    }
    return ps;
}

Rat sum_squared_root_differences(const Polynomial& p) {
    if (p.degree() < 2) throw DegreeError("sum_squared_root_differences: degree >= 2 required");
    std::vector<Rat> ps = power_sums(p, 2);
    return Rat(p.degree()) * ps[2] - ps[1] * ps[1];
}

BinomialForm BinomialForm::of(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomialError();
    const int n = p.degree();
    BinomialForm bf;
    bf.a.resize(n + 1);
    for (int k = 0; k <= n; ++k) bf.a[k] = p[k] / Rat(binomial(n, k));
    return bf;
}

Polynomial BinomialForm::to_polynomial() const {
    const int n = degree();
    std::vector<Rat> c(n + 1);
    for (int k = 0; k <= n; ++k) c[k] = a[k] * Rat(binomial(n, k));
    return Polynomial::from_coeffs(std::move(c));
}

Rat BinomialForm::rosset_e(int k) const {
    Rat v = a[degree() - k];
    return k % 2 ? Rat(-v) : v;
}

bool is_regular(const Polynomial& p) {
    if (p.is_zero() || p.degree() < 1) return false;
    for (const Rat& c : p.coeffs())
        if (c == 0) return false;
    BinomialForm bf = BinomialForm::of(p);
    const int n = bf.degree();
    for (int m = 1; m <= n - 1; ++m)
        if (bf.a[m] * bf.a[m] - bf.a[m - 1] * bf.a[m + 1] == 0) return false;
    return true;
}

Regularized regularize(const Polynomial& p) {
    if (p.is_zero() || p.degree() < 1)
        throw DegreeError("regularize: nonzero polynomial of degree >= 1 required");
    if (is_regular(p)) return {p, Rat(0)};
    // A_{n-1} is proportional to the sum of squared root differences, which is
    // shift-invariant; when it vanishes no shift can make the polynomial regular
    if (p.degree() >= 2 && sum_squared_root_differences(p) == 0)
        throw NotRegularizedError("regularize: A_{n-1} vanishes for every shift");
    // magnitude-increasing ladder: 1, -1, 1/2, -1/2, 2, -2, 3, -3, ...
    std::vector<Rat> ladder = {Rat(1), Rat(-1), Rat(1) / 2, Rat(-1) / 2};
    for (int k = 2; k <= 64; ++k) {
        ladder.push_back(Rat(k));
        ladder.push_back(Rat(-k));
    }
    for (const Rat& beta : ladder) {
        Polynomial q = p.shift(beta);
        if (is_regular(q)) return {q, beta};
    }
    // the bad set of shifts is finite, so this is unreachable at desk scale
    throw AnalysisError("regularize: trial ladder exhausted");
}

}  // namespace newton
