#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace tiltwall {

// All scalar quantities in the library are exact rationals over
// arbitrary-precision integers. No floating point enters any computation;
// doubles appear only when rendering SVG coordinates.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

inline int sign_of(const Rat& x) { return x.sign(); }

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);

// x ∈ step·Z, step > 0
bool on_lattice(const Rat& x, const Rat& step);

// nonnegative generator g of the subgroup aZ + bZ of Q (0 iff a = b = 0)
Rat lattice_gcd(const Rat& a, const Rat& b);

// rational bounds lb ≤ √x ≤ ub, exact when x is a perfect square;
// precision_bits controls the gap ub − lb ≈ 2^(−precision_bits)
Rat sqrt_lower_bound(const Rat& x, unsigned precision_bits = 32);
Rat sqrt_upper_bound(const Rat& x, unsigned precision_bits = 32);

bool is_perfect_square(const Rat& x);

// canonical "p/q", or "p" when q = 1
std::string to_string(const Rat& x);

// strict grammar: [+-]?digits or [+-]?digits/digits with positive
// denominator; no decimals, no whitespace
std::optional<Rat> parse_rat(std::string_view text);

double to_double(const Rat& x);

}  // namespace tiltwall
