#include "tiltwall/surd.hpp"

#include <cmath>
#include <stdexcept>

namespace tiltwall {

Surd Surd::sqrt_of(const Rat& d) { return make(0, 1, d); }

Surd Surd::make(Rat a, Rat b, Rat d) {
  if (d < 0) throw std::domain_error("Surd: negative radicand");
  Surd s;
  s.a_ = std::move(a);
  s.b_ = std::move(b);
  s.d_ = std::move(d);
  s.normalize();
  return s;
}

void Surd::normalize() {
  if (b_ == 0 || d_ == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  Int p = numerator(d_), q = denominator(d_);
  Int sp = sqrt(p), sq = sqrt(q);
  if (sp * sp == p && sq * sq == q) {  // √d rational: fold it in
    a_ += b_ * Rat(sp, sq);
    b_ = 0;
    d_ = 0;
  }
}

Rat Surd::as_rational() const {
  if (!is_rational()) throw std::logic_error("Surd: value is irrational");
  return a_;
}

int Surd::sign() const {
  int sa = sign_of(a_);
  if (b_ == 0) return sa;
  int sb = sign_of(b_);  // d_ > 0 and not a perfect square here
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a² against b²·d (equality would force √d rational)
  Rat lhs = a_ * a_, rhs = b_ * b_ * d_;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

Surd Surd::operator-() const { return make(-a_, -b_, d_); }

static const Rat& common_radicand(const Surd& x, const Surd& y) {
  if (x.sqrt_coeff() != 0 && y.sqrt_coeff() != 0 && x.radicand() != y.radicand())
    throw std::logic_error("Surd: mixed radicands");
  return x.sqrt_coeff() != 0 ? x.radicand() : y.radicand();
}

Surd operator+(const Surd& x, const Surd& y) {
  return Surd::make(x.a_ + y.a_, x.b_ + y.b_, common_radicand(x, y));
}

Surd operator-(const Surd& x, const Surd& y) {
  return Surd::make(x.a_ - y.a_, x.b_ - y.b_, common_radicand(x, y));
}

Surd operator*(const Surd& x, const Rat& c) { return Surd::make(x.a_ * c, x.b_ * c, x.d_); }

Surd operator*(const Rat& c, const Surd& x) { return x * c; }

Int Surd::floor() const {
  if (b_ == 0) return floor_rat(a_);
  // crude enclosure |b|·√d ≤ |b|·(1 + d), then binary search with exact signs
  Rat bound = abs(b_) * (1 + d_);
  Int lo = floor_rat(a_ - bound) - 1;
  Int hi = floor_rat(a_ + bound) + 1;
  // invariant: lo ≤ value < hi + 1; find the largest k with k ≤ value
  while (lo < hi) {
    Int mid = lo + (hi - lo + 1) / 2;
    if ((*this - Surd(Rat(mid))).sign() >= 0)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

Int Surd::ceil() const { return -((-*this).floor()); }

std::string Surd::str() const {
  if (is_rational()) return to_string(a_);
  std::string root = "sqrt(" + to_string(d_) + ")";
  std::string tail;
  if (b_ == 1)
    tail = root;
  else if (b_ == -1)
    tail = "-" + root;
  else
    tail = to_string(b_) + "*" + root;
  if (a_ == 0) return tail;
  if (b_ > 0) return to_string(a_) + "+" + tail;
  return to_string(a_) + tail;  // tail already carries the minus sign
}

double Surd::approx() const {
  return to_double(a_) + to_double(b_) * std::sqrt(to_double(d_));
}

Int floor_div_lattice(const Surd& x, const Rat& step) {
  if (step <= 0) throw std::invalid_argument("floor_div_lattice: step must be positive");
  return (x * (Rat(1) / step)).floor();
}

Int ceil_div_lattice(const Surd& x, const Rat& step) {
  if (step <= 0) throw std::invalid_argument("ceil_div_lattice: step must be positive");
  return (x * (Rat(1) / step)).ceil();
}

Surd min(const Surd& x, const Surd& y) { return (x - y).sign() <= 0 ? x : y; }

Surd max(const Surd& x, const Surd& y) { return (x - y).sign() >= 0 ? x : y; }

}  // namespace tiltwall
