#include "tiltwall/search.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace tiltwall {

namespace {

constexpr std::int64_t kBoxLimit = 4'000'000;  // guards degenerate boxes

// lower and upper e1 bound of one e0 row: the heart inequalities
// 0 ≤ e1 − β·e0 ≤ v.e1 − β·v.e0 at both endpoints
struct RowRange {
  bool feasible = false;
  Surd lb, ub;
};

RowRange row_range(const ChernVector& v, const Surd& lo, const Surd& hi, const Rat& e0) {
  Surd lb = max(lo * e0, hi * e0);
  Rat diff = e0 - v.e0;
  Surd ub = min(Surd(v.e1) + lo * diff, Surd(v.e1) + hi * diff);
  return {(ub - lb).sign() >= 0, lb, ub};
}

CandidateReport evaluate_candidate(const ChernVector& v, const WallLocus& target, const Surd& lo,
                                   const Surd& hi, const Rat& e0, const Rat& e1,
                                   const Lattice& lat, const SearchOptions& opt) {
  CandidateReport r;
  r.e0 = e0;
  r.e1 = e1;
  auto log = [&r](const char* name, bool ok) {
    r.constraints.push_back({name, ok});
    return ok;
  };

  Surd t_lo = Surd(e1) - lo * e0;
  Surd t_hi = Surd(e1) - hi * e0;
  Surd c_lo = Surd(v.e1) - lo * v.e0;
  Surd c_hi = Surd(v.e1) - hi * v.e0;
  log("heart_lower_at_beta_lo", t_lo.sign() >= 0);
  log("heart_lower_at_beta_hi", t_hi.sign() >= 0);
  log("heart_upper_at_beta_lo", (c_lo - t_lo).sign() >= 0);
  log("heart_upper_at_beta_hi", (c_hi - t_hi).sign() >= 0);
  // the upper heart bound is exactly admissibility of the numerical quotient
  log("quotient_admissible", (c_lo - t_lo).sign() >= 0 && (c_hi - t_hi).sign() >= 0);

  r.e2 = solve_e2_for_wall(v, e0, e1, target);
  if (!log("e2_solution_exists", !r.e2.empty())) return r;

  const Rat& d2 = lat.step(2);
  if (!r.e2.all_e2) {
    for (const Rat& t : r.e2.values)
      if (on_lattice(t, d2)) {
        r.witness_e2 = t;
        break;
      }
  } else {
    // pick the lattice value of smallest magnitude outside the excluded set
    for (std::int64_t n = 0; !r.witness_e2; ++n) {
      Rat t = Rat(n % 2 ? (n + 1) / 2 : -n / 2) * d2;  // 0, 1, -1, 2, -2, ...
      if (std::find(r.e2.excluded.begin(), r.e2.excluded.end(), t) == r.e2.excluded.end())
        r.witness_e2 = t;
    }
  }
  if (!log("e2_on_lattice", r.witness_e2.has_value())) return r;

  ChernVector cand{e0, e1, *r.witness_e2, 0};
  r.induced_wall = wall_between(v, cand);
  bool identical = r.induced_wall.has_value() && realizable(*r.induced_wall) &&
                   walls_nested(*r.induced_wall, target) == WallRelation::Identical;
  log("induced_wall_identical", identical);
  bool pass = identical;
  if (opt.delta_filter) {
    Rat dc = e1 * e1 - 2 * e0 * *r.witness_e2;
    Rat dq = (v.e1 - e1) * (v.e1 - e1) - 2 * (v.e0 - e0) * (v.e2 - *r.witness_e2);
    pass = log("delta_candidate_nonneg", dc >= 0) && pass;
    pass = log("delta_quotient_nonneg", dq >= 0) && pass;
  }
  r.matches_target = pass;
  return r;
}

}  // namespace

HeartInterval::HeartInterval(Rat lo, Rat hi) : beta_lo(std::move(lo)), beta_hi(std::move(hi)) {
  if (beta_lo > beta_hi) throw std::invalid_argument("HeartInterval: empty interval");
}

const char* conclusion_str(Conclusion c) {
  switch (c) {
    case Conclusion::CounterexampleConfirmed: return "CounterexampleConfirmed";
    case Conclusion::WallCandidateFound: return "WallCandidateFound";
    case Conclusion::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::vector<std::pair<Rat, Rat>> heart_bounds_at(const ChernVector& v, const Surd& beta_lo,
                                                 const Surd& beta_hi, const Rat& e0_min,
                                                 const Rat& e0_max, const Lattice& lat) {
  if ((beta_hi - beta_lo).sign() < 0)
    throw std::invalid_argument("heart_bounds: empty beta interval");
  if (e0_min > e0_max) throw std::invalid_argument("heart_bounds: empty e0 box");
  if ((Surd(v.e1) - beta_lo * v.e0).sign() < 0 || (Surd(v.e1) - beta_hi * v.e0).sign() < 0)
    throw std::invalid_argument("heart_bounds: class is not admissible on the whole interval");

  const Rat& d0 = lat.step(0);
  const Rat& d1 = lat.step(1);
  Int k_lo = ceil_rat(e0_min / d0);
  Int k_hi = floor_rat(e0_max / d0);
  if (k_hi - k_lo > kBoxLimit) throw std::runtime_error("heart_bounds: e0 box too large");

  std::vector<std::pair<Rat, Rat>> out;
  for (Int k = k_lo; k <= k_hi; ++k) {
    Rat e0 = Rat(k) * d0;
    RowRange row = row_range(v, beta_lo, beta_hi, e0);
    if (!row.feasible) continue;
    Int m_lo = ceil_div_lattice(row.lb, d1);
    Int m_hi = floor_div_lattice(row.ub, d1);
    if (m_hi - m_lo > kBoxLimit || Int(out.size()) + (m_hi - m_lo) > kBoxLimit)
      throw std::runtime_error("heart_bounds: candidate set too large");
    for (Int m = m_lo; m <= m_hi; ++m) out.emplace_back(e0, Rat(m) * d1);
  }
  return out;
}

std::vector<std::pair<Rat, Rat>> heart_bounds(const ChernVector& v, const HeartInterval& I,
                                              const Rat& e0_min, const Rat& e0_max,
                                              const Lattice& lat) {
  return heart_bounds_at(v, Surd(I.beta_lo), Surd(I.beta_hi), e0_min, e0_max, lat);
}

E2Solutions solve_e2_for_wall(const ChernVector& v, const Rat& e0, const Rat& e1,
                              const WallLocus& target) {
  if (!realizable(target))
    throw std::invalid_argument("solve_e2_for_wall: target must be realizable");
  E2Solutions out;
  // wall_between(v, (e0, e1, t, ·)) has coefficients affine in t:
  //   x          = (e0·v.e1 − v.e0·e1)/2      (constant)
  //   y(t)       = v.e0·t − e0·v.e2           (slope v.e0)
  //   z(t)       = e1·v.e2 − v.e1·t           (slope −v.e1)
  Rat xc = (e0 * v.e1 - v.e0 * e1) / 2;

  if (target.x != 0) {
    if (xc == 0) return out;  // proportionality would force λ = 0
    Rat lambda = xc / target.x;
    // v.e0 = v.e1 = 0 would force xc = 0, so one linear equation has a slope
    if (v.e0 != 0) {
      Rat t = (lambda * target.y + e0 * v.e2) / v.e0;
      if (e1 * v.e2 - v.e1 * t == lambda * target.z) out.values.push_back(t);
    } else {
      Rat t = (e1 * v.e2 - lambda * target.z) / v.e1;
      if (-e0 * v.e2 == lambda * target.y) out.values.push_back(t);  // y(t) is constant here
    }
    return out;
  }

  // vertical target (x = 0, y ≠ 0): need (y(t), z(t)) a nonzero multiple of
  // (target.y, target.z); the cross product is linear in t: a·t − b
  if (xc != 0) return out;
  Rat a = v.e0 * target.z + v.e1 * target.y;
  Rat b = v.e2 * (e0 * target.z + e1 * target.y);
  if (a != 0) {
    Rat t = b / a;
    bool collapses = v.e0 * t - e0 * v.e2 == 0 && e1 * v.e2 - v.e1 * t == 0;
    if (!collapses) out.values.push_back(t);
    return out;
  }
  if (b != 0) return out;
  // cross product vanishes identically: the whole pencil is parallel
  if (v.e0 == 0 && v.e1 == 0) {
    // (y, z) = (−e0·v.e2, e1·v.e2) independent of t: all or nothing
    if (e0 * v.e2 != 0 || e1 * v.e2 != 0) out.all_e2 = true;
    return out;
  }
  // a = 0 with target.y ≠ 0 rules out v.e0 = 0, so the pencil moves and
  // passes through (0, 0) at exactly one t: the member with no wall at all
  out.all_e2 = true;
  out.excluded.push_back(e0 * v.e2 / v.e0);
  return out;
}

VerticalLineCheck vertical_ray_stable(const ChernVector& v, const Rat& beta0,
                                      const Lattice& lat) {
  VerticalLineCheck c;
  c.applicable = true;
  c.beta = beta0;
  c.cap = v.e1 - beta0 * v.e0;
  if (c.cap < 0)
    throw std::invalid_argument("vertical_ray_stable: class not admissible at beta0");
  // twisted degrees of lattice classes at β = beta0 form the group
  // d1·Z + beta0·d0·Z; a destabilizer must land in [0, cap]
  c.step = lattice_gcd(lat.step(1), beta0 * lat.step(0));
  c.degenerate = c.cap == 0;
  if (c.degenerate) {
    c.stable = true;
    c.admissible = {Rat(0)};
    c.note = "twisted degree of the class vanishes on this line; every inclusion is slope-infinite (degenerate case)";
    return c;
  }
  Int m = floor_rat(c.cap / c.step);
  bool interior = m >= 2 || (m == 1 && Rat(m) * c.step != c.cap);
  c.stable = !interior;
  Int listed = m < 64 ? m : Int(64);
  for (Int k = 0; k <= listed; ++k) c.admissible.push_back(Rat(k) * c.step);
  c.truncated = m > listed;
  c.note = c.stable ? "every attainable twisted degree in [0, cap] is 0 or cap, so one side of any "
                      "destabilizing sequence would have infinite slope"
                    : "attainable twisted degrees strictly between 0 and cap exist; this line does "
                      "not rule out enclosing walls";
  return c;
}

std::vector<CandidateReport> enumerate_candidates_serial(const ChernVector& v,
                                                         const WallLocus& target,
                                                         const Surd& beta_lo, const Surd& beta_hi,
                                                         const Rat& e0_min, const Rat& e0_max,
                                                         const Lattice& lat,
                                                         const SearchOptions& opt) {
  auto pairs = heart_bounds_at(v, beta_lo, beta_hi, e0_min, e0_max, lat);
  std::vector<CandidateReport> out;
  out.reserve(pairs.size());
  for (const auto& [e0, e1] : pairs)
    out.push_back(evaluate_candidate(v, target, beta_lo, beta_hi, e0, e1, lat, opt));
  return out;
}

std::vector<CandidateReport> enumerate_candidates(const ChernVector& v, const WallLocus& target,
                                                  const Surd& beta_lo, const Surd& beta_hi,
                                                  const Rat& e0_min, const Rat& e0_max,
                                                  const Lattice& lat, const SearchOptions& opt) {
  if (opt.workers == 1)
    return enumerate_candidates_serial(v, target, beta_lo, beta_hi, e0_min, e0_max, lat, opt);
  auto pairs = heart_bounds_at(v, beta_lo, beta_hi, e0_min, e0_max, lat);
  std::vector<CandidateReport> out(pairs.size());
#ifdef _OPENMP
  int workers = opt.workers > 0 ? opt.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(pairs.size()); ++i)
    out[static_cast<size_t>(i)] = evaluate_candidate(v, target, beta_lo, beta_hi,
                                                     pairs[static_cast<size_t>(i)].first,
                                                     pairs[static_cast<size_t>(i)].second, lat, opt);
#else
  for (size_t i = 0; i < pairs.size(); ++i)
    out[i] = evaluate_candidate(v, target, beta_lo, beta_hi, pairs[i].first, pairs[i].second, lat,
                                opt);
#endif
  return out;  // slot-per-candidate writes keep the order canonical for any worker count
}

bool reports_equal(const CandidateReport& a, const CandidateReport& b) { return a == b; }

VerificationReport verify_class(const ChernVector& v, const Lattice& lat,
                                const SearchOptions& opt) {
  if (opt.region_margin < 0 || opt.region_margin >= 1)
    throw std::invalid_argument("verify: region_margin must lie in [0, 1)");

  VerificationReport rep;
  rep.v = v;
  rep.target = q_wall(v);
  rep.target_shape = shape(rep.target);
  rep.witness_q = 0;

  if (discriminant(v) < 0) {
    rep.notes.push_back(
        "discriminant is negative: the form is negative on an unbounded region and the "
        "nested-wall argument does not apply");
    return rep;
  }
  if (rep.target_shape.kind == WallKind::Empty) {
    rep.notes.push_back(
        "the quadratic form has an empty boundary locus in s > 0 (identically degenerate); "
        "there is no negative region to certify");
    return rep;
  }

  // β-extent of the boundary wall
  Surd lo, hi;
  if (rep.target_shape.kind == WallKind::Semicircle) {
    Surd r = Surd::sqrt_of(rep.target_shape.radius_sq);
    lo = Surd(rep.target_shape.center) - r;
    hi = Surd(rep.target_shape.center) + r;
  } else {
    lo = hi = Surd(rep.target_shape.beta);
  }
  const Surd extent_hi = hi;

  // cut to where v itself has nonnegative twisted degree
  bool inadmissible = false;
  if (v.e0 > 0) {
    Surd bound{v.e1 / v.e0};
    if (bound < lo)
      inadmissible = true;
    else
      hi = min(hi, bound);
  } else if (v.e0 < 0) {
    Surd bound{v.e1 / v.e0};
    if (bound > hi)
      inadmissible = true;
    else
      lo = max(lo, bound);
  } else if (v.e1 < 0) {
    inadmissible = true;
  }
  rep.beta_lo = lo;
  rep.beta_hi = hi;
  if (inadmissible) {
    rep.notes.push_back(
        "class leaves the numerical heart on the entire wall extent; the boundary locus is "
        "not reachable from inside the heart");
    return rep;
  }

  // destabilization along the vertical line at the wall's right edge: a wall
  // enclosing the boundary locus would have to cross it
  if (extent_hi.is_rational()) {
    Rat b0 = extent_hi.as_rational();
    if (v.e1 - b0 * v.e0 >= 0) {
      rep.vertical = vertical_ray_stable(v, b0, lat);
    } else {
      VerticalLineCheck c;
      c.beta = b0;
      c.note = "class is outside the numerical heart at the right edge of the wall";
      rep.vertical = c;
    }
  } else {
    VerticalLineCheck c;
    c.note =
        "right edge of the wall is irrational; the vertical-line lattice argument needs a "
        "rational abscissa";
    rep.vertical = c;
  }

  // candidate box
  const Rat& d0 = lat.step(0);
  Rat cap;
  if (opt.e0_max) {
    cap = abs(*opt.e0_max);
  } else {
    Rat base = abs(v.e0) > d0 ? abs(v.e0) : d0;
    cap = opt.e0_cap_multiplier * base;
  }
  Rat e0_min = opt.line_bundle_bound ? v.e0 : -cap;
  if (e0_min <= cap)
    rep.candidates = enumerate_candidates(v, rep.target, lo, hi, e0_min, cap, lat, opt);

  // completeness: the e1 window (concave in e0) is nonempty on an interval of
  // e0 values, so an anchor inside the box plus infeasible probes one lattice
  // step beyond each edge certify that nothing was cut off. v itself is
  // always a feasible row, which provides the anchor.
  bool anchored = v.e0 >= e0_min && v.e0 <= cap;
  bool above_closed = !row_range(v, lo, hi, Rat(floor_rat(cap / d0) + 1) * d0).feasible;
  bool below_closed =
      opt.line_bundle_bound || !row_range(v, lo, hi, Rat(ceil_rat(e0_min / d0) - 1) * d0).feasible;
  rep.enumeration_complete = anchored && above_closed && below_closed;
  if (opt.line_bundle_bound)
    rep.notes.push_back(
        "lower rank bound e0 >= v.e0 in force (sheaf-theoretic wall-restriction argument for "
        "line bundles)");
  if (!rep.enumeration_complete)
    rep.notes.push_back(
        "candidate box may truncate the feasible range; absence of matches is not conclusive");

  bool any_match =
      std::any_of(rep.candidates.begin(), rep.candidates.end(),
                  [](const CandidateReport& c) { return c.matches_target; });
  if (any_match) {
    rep.conclusion = Conclusion::WallCandidateFound;
    rep.notes.push_back(
        "a lattice class reproduces the boundary wall exactly; stability inside the negative "
        "region cannot be certified by this argument");
    return rep;
  }

  bool vertical_ok = rep.vertical && rep.vertical->applicable && rep.vertical->stable;
  if (!vertical_ok || !rep.enumeration_complete) {
    rep.conclusion = Conclusion::Inconclusive;
    if (!vertical_ok)
      rep.notes.push_back(
          "no candidate matches, but a wall enclosing the boundary locus could not be excluded "
          "(vertical-line argument unavailable or failed)");
    return rep;
  }

  rep.conclusion = Conclusion::CounterexampleConfirmed;
  if (rep.target_shape.kind == WallKind::Semicircle) {
    // halfway up the disc, pulled toward the center by the margin
    Rat f = 1 - opt.region_margin;
    rep.witness = TiltPoint(rep.target_shape.radius_sq * f * f / 4, rep.target_shape.center);
  } else {
    Rat offset = 1 + opt.region_margin;
    Rat beta = rep.target.y > 0 ? Rat(rep.target_shape.beta - offset)
                                : Rat(rep.target_shape.beta + offset);
    rep.witness = TiltPoint(1, beta);
  }
  rep.witness_q = q_form(v, *rep.witness);
  rep.notes.push_back(
      "no lattice candidate reproduces the boundary wall and no destabilizing wall crosses the "
      "vertical line at its right edge, so every actual wall lies strictly inside the negative "
      "region; stable points with negative form exist between any such wall and the boundary");
  return rep;
}

VerificationReport verify_counterexample(const VarietyPreset& preset, const DivisorClass& d,
                                         const SearchOptions& opt) {
  ChernVector v = preset.chern_of_line_bundle(d);
  const Lattice& lat = opt.lattice_override ? *opt.lattice_override : preset.lattice();
  return verify_class(v, lat, opt);
}

}  // namespace tiltwall
