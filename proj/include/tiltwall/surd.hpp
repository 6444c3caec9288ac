#pragma once

#include "tiltwall/rational.hpp"

namespace tiltwall {

// Element a + b·√d of a real quadratic extension of Q, with d ≥ 0 rational.
// Wall extents c ± r have r = √(r²) irrational in general; this type keeps
// endpoint comparisons and lattice rounding exact instead of approximating.
//
// Canonical form: b = 0 implies d = 0, and perfect-square radicands fold
// into the rational part, so is_rational() is an exact test. Mixed-radicand
// arithmetic is rejected (every interval in this library lives in a single
// quadratic extension).
class Surd {
 public:
  Surd() = default;
  Surd(Rat a) : a_(std::move(a)) {}  // rationals embed implicitly
  Surd(long long a) : a_(a) {}

  static Surd sqrt_of(const Rat& d);            // √d, d ≥ 0
  static Surd make(Rat a, Rat b, Rat d);        // a + b·√d

  const Rat& rational_part() const { return a_; }
  const Rat& sqrt_coeff() const { return b_; }
  const Rat& radicand() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  Rat as_rational() const;  // throws std::logic_error unless is_rational()

  int sign() const;  // exact

  Surd operator-() const;
  friend Surd operator+(const Surd& x, const Surd& y);
  friend Surd operator-(const Surd& x, const Surd& y);
  friend Surd operator*(const Surd& x, const Rat& c);
  friend Surd operator*(const Rat& c, const Surd& x);

  friend bool operator<(const Surd& x, const Surd& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const Surd& x, const Surd& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const Surd& x, const Surd& y) { return (x - y).sign() > 0; }
  friend bool operator>=(const Surd& x, const Surd& y) { return (x - y).sign() >= 0; }
  friend bool operator==(const Surd& x, const Surd& y) { return (x - y).sign() == 0; }

  Int floor() const;  // exact ⌊a + b√d⌋
  Int ceil() const;

  std::string str() const;  // "a", "a+b*sqrt(d)", "a-sqrt(d)", ...
  double approx() const;

 private:
  void normalize();

  Rat a_ = 0;
  Rat b_ = 0;
  Rat d_ = 0;
};

// extremal integers k with k·step ≤ x (resp. k·step ≥ x), step > 0
Int floor_div_lattice(const Surd& x, const Rat& step);
Int ceil_div_lattice(const Surd& x, const Rat& step);

Surd min(const Surd& x, const Surd& y);
Surd max(const Surd& x, const Surd& y);

}  // namespace tiltwall
