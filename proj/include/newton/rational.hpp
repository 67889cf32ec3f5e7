#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>

namespace newton {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sgn(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }
inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

Int binomial(unsigned n, unsigned k);
Int pow10(unsigned k);

// "num/den" (den omitted when 1); exact, no decimals
std::string rat_string(const Rat& r);

enum class Round { Nearest, Floor, Ceil };

// Fixed-point decimal with the given number of fractional digits.
std::string decimal_string(const Rat& r, unsigned digits, Round mode = Round::Nearest);

// Decimal value of r rounded per mode at the given number of digits.
Rat decimal_round(const Rat& r, unsigned digits, Round mode);

// [lo, hi] with lo^2 <= v <= hi^2 and hi - lo <= tol; requires v >= 0.
std::pair<Rat, Rat> sqrt_bracket(const Rat& v, const Rat& tol);

}  // namespace newton
