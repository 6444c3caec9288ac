#pragma once

#include "tiltwall/rational.hpp"

namespace tiltwall {

// H-degree contractions of a numerical Chern character on a polarized
// threefold: (e0, e1, e2, e3) = (H³·ch₀, H²·ch₁, H·ch₂, ch₃).
// Everything downstream (twists, slopes, walls, the quadratic form) is a
// polynomial in these four rationals, so they are the only state we carry.
struct ChernVector {
  Rat e0, e1, e2, e3;

  bool operator==(const ChernVector&) const = default;
};

// Point of the tilt half-plane in (s, β) coordinates with s = α².
// Using s instead of α keeps every locus polynomial with rational
// coefficients; α is only ever materialized when drawing pictures.
class TiltPoint {
 public:
  TiltPoint(Rat s, Rat beta);  // throws std::domain_error if s < 0

  const Rat& s() const { return s_; }
  const Rat& beta() const { return beta_; }

 private:
  Rat s_;
  Rat beta_;
};

// Tilt slope as an unreduced projective pair; den = 0 encodes an infinite
// slope (twisted rank-one-degree-zero objects), so no division ever happens.
struct Slope {
  Rat num, den;

  bool operator==(const Slope&) const = default;
};

enum class SlopeOrder { Less, Equal, Greater, Incomparable };

// ch ↦ e^{−βH}·ch expressed on the contracted coordinates
ChernVector twist(const ChernVector& v, const Rat& beta);

// H-discriminant e1² − 2·e0·e2 (twist-invariant)
Rat discriminant(const ChernVector& v);

// quadratic form s·Δ + 4·(H·ch₂^β)² − 6·(H²·ch₁^β)·(ch₃^β); its sign
// pattern is the object of study, the value is exact
Rat q_form(const ChernVector& v, const TiltPoint& p);

// ν_{α,β} as the pair (H·ch₂^β − (s/2)·H³·ch₀, H²·ch₁^β)
Slope tilt_slope(const ChernVector& v, const TiltPoint& p);

// cross-multiplied comparison; infinite slopes compare equal to each other
// and greater than any finite slope; negative denominators (objects outside
// the heart) are not comparable
SlopeOrder slope_cmp(const Slope& a, const Slope& b);

// all 2×2 minors of the 2×4 matrix (v | w) vanish (cross-multiplication,
// no division, zero vectors allowed)
bool proportional(const ChernVector& v, const ChernVector& w);

}  // namespace tiltwall
