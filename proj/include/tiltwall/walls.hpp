#pragma once

#include "tiltwall/chern.hpp"
#include "tiltwall/rational.hpp"

#include <optional>
#include <vector>

namespace tiltwall {

// Locus x·(s + β²) + y·β + z = 0 in the (β, s) half-plane (s = α² > 0).
// Coefficients are kept exactly as constructed (wall_between / q_wall give
// canonical formulas); use normalized() for identity comparisons.
struct WallLocus {
  Rat x, y, z;

  bool operator==(const WallLocus&) const = default;
};

enum class WallKind { Semicircle, VerticalLine, Empty };

// Resolved geometry of a locus: semicircles are centered on the β-axis at
// (center, 0) with the given squared radius; vertical lines sit at β.
struct WallShape {
  WallKind kind = WallKind::Empty;
  Rat center, radius_sq;  // Semicircle
  Rat beta;               // VerticalLine
};

enum class WallRelation { Identical, Disjoint, Crossing };

// numerical wall where the tilt slopes of v and w agree:
//   x = (w.e0·v.e1 − v.e0·w.e1)/2
//   y = v.e0·w.e2 − w.e0·v.e2
//   z = w.e1·v.e2 − v.e1·w.e2
// None when the equation is trivial (x = y = z = 0)
std::optional<WallLocus> wall_between(const ChernVector& v, const ChernVector& w);

// zero locus of the quadratic form of v:
//   (Δ(v), 6·e0·e3 − 2·e1·e2, 4·e2² − 6·e1·e3)
WallLocus q_wall(const ChernVector& v);

WallShape shape(const WallLocus& w);

// has nonempty trace in the open half-plane s > 0
bool realizable(const WallLocus& w);

// gcd-reduced integer representative with the first nonzero coefficient
// positive; the zero triple maps to itself
WallLocus normalized(const WallLocus& w);

// exact value of x·(s + β²) + y·β + z at p
Rat eval_wall(const WallLocus& w, const TiltPoint& p);

// relation of two realizable loci inside s > 0: Identical, Disjoint (which
// includes tangency at the boundary s = 0), or genuinely Crossing; throws
// std::invalid_argument on non-realizable input
WallRelation walls_nested(const WallLocus& a, const WallLocus& b);

// `count` exact rational points on the locus with s > 0 (s ≥ 0 never
// occurs: samples stay strictly inside), pairwise distinct β on
// semicircles, distinct s on vertical lines; throws on Empty loci
std::vector<TiltPoint> point_on_wall(const WallLocus& w, int count);

}  // namespace tiltwall
