#include "tiltwall/chern.hpp"

#include <array>
#include <stdexcept>

namespace tiltwall {

TiltPoint::TiltPoint(Rat s, Rat beta) : s_(std::move(s)), beta_(std::move(beta)) {
  if (s_ < 0) throw std::domain_error("TiltPoint: s = alpha^2 must be >= 0");
}

ChernVector twist(const ChernVector& v, const Rat& beta) {
  Rat b2 = beta * beta;
  Rat b3 = b2 * beta;
  return {
      v.e0,
      v.e1 - beta * v.e0,
      v.e2 - beta * v.e1 + b2 / 2 * v.e0,
      v.e3 - beta * v.e2 + b2 / 2 * v.e1 - b3 / 6 * v.e0,
  };
}

Rat discriminant(const ChernVector& v) { return v.e1 * v.e1 - 2 * v.e0 * v.e2; }

Rat q_form(const ChernVector& v, const TiltPoint& p) {
  ChernVector w = twist(v, p.beta());
  return p.s() * discriminant(v) + 4 * w.e2 * w.e2 - 6 * w.e1 * w.e3;
}

Slope tilt_slope(const ChernVector& v, const TiltPoint& p) {
  ChernVector w = twist(v, p.beta());
  return {w.e2 - p.s() / 2 * v.e0, w.e1};
}

SlopeOrder slope_cmp(const Slope& a, const Slope& b) {
  if (a.den < 0 || b.den < 0) return SlopeOrder::Incomparable;
  bool inf_a = a.den == 0, inf_b = b.den == 0;
  if (inf_a && inf_b) return SlopeOrder::Equal;
  if (inf_b) return SlopeOrder::Less;
  if (inf_a) return SlopeOrder::Greater;
  Rat lhs = a.num * b.den, rhs = b.num * a.den;
  if (lhs == rhs) return SlopeOrder::Equal;
  return lhs < rhs ? SlopeOrder::Less : SlopeOrder::Greater;
}

bool proportional(const ChernVector& v, const ChernVector& w) {
  std::array<const Rat*, 4> a{&v.e0, &v.e1, &v.e2, &v.e3};
  std::array<const Rat*, 4> b{&w.e0, &w.e1, &w.e2, &w.e3};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (*a[i] * *b[j] != *a[j] * *b[i]) return false;
  return true;
}

}  // namespace tiltwall
