#include "tiltwall/walls.hpp"

#include <stdexcept>

namespace tiltwall {

std::optional<WallLocus> wall_between(const ChernVector& v, const ChernVector& w) {
  WallLocus locus{
      (w.e0 * v.e1 - v.e0 * w.e1) / 2,
      v.e0 * w.e2 - w.e0 * v.e2,
      w.e1 * v.e2 - v.e1 * w.e2,
  };
  if (locus.x == 0 && locus.y == 0 && locus.z == 0) return std::nullopt;
  return locus;
}

WallLocus q_wall(const ChernVector& v) {
  return {
      discriminant(v),
      6 * v.e0 * v.e3 - 2 * v.e1 * v.e2,
      4 * v.e2 * v.e2 - 6 * v.e1 * v.e3,
  };
}

WallShape shape(const WallLocus& w) {
  WallShape s;
  if (w.x != 0) {
    Rat radius_sq = (w.y * w.y - 4 * w.x * w.z) / (4 * w.x * w.x);
    if (radius_sq <= 0) return s;  // single boundary point or nothing: Empty in s > 0
    s.kind = WallKind::Semicircle;
    s.center = -w.y / (2 * w.x);
    s.radius_sq = radius_sq;
    return s;
  }
  if (w.y != 0) {
    s.kind = WallKind::VerticalLine;
    s.beta = -w.z / w.y;
    return s;
  }
  return s;  // x = y = 0: either no solutions (z ≠ 0) or the whole plane — not a wall either way
}

bool realizable(const WallLocus& w) { return shape(w).kind != WallKind::Empty; }

WallLocus normalized(const WallLocus& w) {
  if (w.x == 0 && w.y == 0 && w.z == 0) return w;
  Int m = lcm(lcm(denominator(w.x), denominator(w.y)), denominator(w.z));
  Int xi = numerator(w.x) * (m / denominator(w.x));
  Int yi = numerator(w.y) * (m / denominator(w.y));
  Int zi = numerator(w.z) * (m / denominator(w.z));
  Int g = gcd(gcd(abs(xi), abs(yi)), abs(zi));
  xi /= g;
  yi /= g;
  zi /= g;
  Int lead = xi != 0 ? xi : (yi != 0 ? yi : zi);
  if (lead < 0) {
    xi = -xi;
    yi = -yi;
    zi = -zi;
  }
  return {Rat(xi), Rat(yi), Rat(zi)};
}

Rat eval_wall(const WallLocus& w, const TiltPoint& p) {
  return w.x * (p.s() + p.beta() * p.beta()) + w.y * p.beta() + w.z;
}

WallRelation walls_nested(const WallLocus& a, const WallLocus& b) {
  WallShape sa = shape(a), sb = shape(b);
  if (sa.kind == WallKind::Empty || sb.kind == WallKind::Empty)
    throw std::invalid_argument("walls_nested: loci must be realizable");
  if (normalized(a) == normalized(b)) return WallRelation::Identical;

  if (sa.kind == WallKind::Semicircle && sb.kind == WallKind::Semicircle) {
    // circles with centers c_i on the axis and radii r_i intersect off the
    // axis iff |r1 − r2| < |c1 − c2| < r1 + r2; squaring both comparisons
    // collapses to u² < 4·r1²·r2² with u = (c1 − c2)² − r1² − r2²
    Rat dc = sa.center - sb.center;
    Rat u = dc * dc - sa.radius_sq - sb.radius_sq;
    return u * u < 4 * sa.radius_sq * sb.radius_sq ? WallRelation::Crossing
                                                   : WallRelation::Disjoint;
  }
  if (sa.kind == WallKind::VerticalLine && sb.kind == WallKind::VerticalLine)
    return WallRelation::Disjoint;  // distinct parallel lines

  const WallShape& circle = sa.kind == WallKind::Semicircle ? sa : sb;
  const WallShape& line = sa.kind == WallKind::VerticalLine ? sa : sb;
  Rat d = line.beta - circle.center;
  // tangency (d² = r²) touches only at s = 0, outside the open half-plane
  return d * d < circle.radius_sq ? WallRelation::Crossing : WallRelation::Disjoint;
}

std::vector<TiltPoint> point_on_wall(const WallLocus& w, int count) {
  if (count <= 0) throw std::invalid_argument("point_on_wall: count must be positive");
  WallShape s = shape(w);
  if (s.kind == WallKind::Empty)
    throw std::invalid_argument("point_on_wall: locus has no points with s > 0");

  std::vector<TiltPoint> points;
  points.reserve(static_cast<size_t>(count));
  if (s.kind == WallKind::VerticalLine) {
    for (int j = 0; j < count; ++j) points.emplace_back(Rat(j + 1), s.beta);
    return points;
  }
  // walk rational offsets 0 ≤ t < r from the top of the semicircle; with
  // t strictly below the radius, s = r² − t² stays strictly positive
  Rat r_lb = sqrt_lower_bound(s.radius_sq);
  for (int j = 0; j < count; ++j) {
    Rat t = Rat(j) * r_lb / count;
    points.emplace_back(s.radius_sq - t * t, s.center + t);
  }
  return points;
}

}  // namespace tiltwall
