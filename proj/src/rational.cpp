#include "tiltwall/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tiltwall {

Int floor_rat(const Rat& x) {
  Int n = numerator(x);
  Int d = denominator(x);
  Int q = n / d;  // truncates toward zero
  if (n % d != 0 && n < 0) --q;
  return q;
}

Int ceil_rat(const Rat& x) {
  Int n = numerator(x);
  Int d = denominator(x);
  Int q = n / d;
  if (n % d != 0 && n > 0) ++q;
  return q;
}

bool on_lattice(const Rat& x, const Rat& step) {
  if (step <= 0) throw std::invalid_argument("on_lattice: step must be positive");
  return is_integer(x / step);
}

Rat lattice_gcd(const Rat& a, const Rat& b) {
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  // bring to a common denominator, take the integer gcd of numerators
  Int da = denominator(a), db = denominator(b);
  Int na = abs(Int(numerator(a) * db)), nb = abs(Int(numerator(b) * da));
  return Rat(gcd(na, nb), Int(da * db));
}

Rat sqrt_lower_bound(const Rat& x, unsigned precision_bits) {
  if (x < 0) throw std::domain_error("sqrt_lower_bound: negative argument");
  if (x == 0) return 0;
  Int p = numerator(x), q = denominator(x);
  Int shift = Int(1) << precision_bits;
  Int s = sqrt(Int(p * q * shift * shift));  // integer floor square root
  return Rat(s, Int(q * shift));
}

Rat sqrt_upper_bound(const Rat& x, unsigned precision_bits) {
  if (x < 0) throw std::domain_error("sqrt_upper_bound: negative argument");
  if (x == 0) return 0;
  Int p = numerator(x), q = denominator(x);
  Int shift = Int(1) << precision_bits;
  Int n = p * q * shift * shift;
  Int s = sqrt(n);
  if (s * s == n) return Rat(s, Int(q * shift));  // exact
  return Rat(Int(s + 1), Int(q * shift));
}

bool is_perfect_square(const Rat& x) {
  if (x < 0) return false;
  Int p = numerator(x), q = denominator(x);
  Int sp = sqrt(p), sq = sqrt(q);
  return sp * sp == p && sq * sq == q;
}

std::string to_string(const Rat& x) {
  Int n = numerator(x);
  Int d = denominator(x);
  std::string s = n.str();
  if (d != 1) {
    s += '/';
    s += d.str();
  }
  return s;
}

std::optional<Rat> parse_rat(std::string_view text) {
  auto digits_only = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string_view num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!digits_only(num) || !digits_only(den)) return std::nullopt;
  Int d{std::string(den)};
  if (d == 0) return std::nullopt;
  Int n{std::string(num)};
  if (negative) n = -n;
  return Rat(n, d);
}

double to_double(const Rat& x) { return x.convert_to<double>(); }

}  // namespace tiltwall
