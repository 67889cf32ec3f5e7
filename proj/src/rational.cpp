#include "newton/rational.hpp"

#include <stdexcept>

namespace newton {

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Int pow10(unsigned k) {
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) r *= 10;
    return r;
}

std::string rat_string(const Rat& r) {
    Int num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

static Int scaled_integer(const Rat& r, unsigned digits, Round mode) {
    // floor/ceil/nearest of r * 10^digits
    Rat s = r * Rat(pow10(digits));
    Int num = numerator(s), den = denominator(s);
    Int q, rem;
    divide_qr(num, den, q, rem);
    if (rem < 0) { q -= 1; rem += den; }  // floor
    switch (mode) {
        case Round::Floor: return q;
        case Round::Ceil: return rem == 0 ? q : Int(q + 1);
        case Round::Nearest: return 2 * rem >= den ? Int(q + 1) : q;
    }
    return q;
}

std::string decimal_string(const Rat& r, unsigned digits, Round mode) {
    Int q = scaled_integer(r, digits, mode);
    bool neg = q < 0;
    if (neg) q = -q;
    Int scale = pow10(digits);
    Int ip = q / scale, fp = q % scale;
    std::string frac = fp.str();
    if (frac.size() < digits) frac.insert(0, digits - frac.size(), '0');
    std::string s = (neg ? "-" : "") + ip.str();
    if (digits > 0) s += "." + frac;
    return s;
}

Rat decimal_round(const Rat& r, unsigned digits, Round mode) {
    return Rat(scaled_integer(r, digits, mode)) / Rat(pow10(digits));
}

std::pair<Rat, Rat> sqrt_bracket(const Rat& v, const Rat& tol) {
    if (v < 0) throw std::domain_error("sqrt_bracket: negative argument");
    if (v == 0) return {Rat(0), Rat(0)};
    if (tol <= 0) throw std::domain_error("sqrt_bracket: tolerance must be positive");
    // sqrt(n/d) = sqrt(n*d)/d; floor integer sqrt at scale S gives error <= 1/(d*S)
    Int S = numerator(Rat(1) / tol) / denominator(Rat(1) / tol) + 1;
    Int n = numerator(v), d = denominator(v);
    Int t = sqrt(Int(n * d * S * S));
    Rat lo = Rat(t) / Rat(d * S);
    Rat hi = Rat(t + 1) / Rat(d * S);
    return {lo, hi};
}

}  // namespace newton
