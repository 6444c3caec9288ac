#pragma once

#include "tiltwall/chern.hpp"
#include "tiltwall/surd.hpp"
#include "tiltwall/variety.hpp"
#include "tiltwall/walls.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tiltwall {

// closed β-interval on which destabilizer candidates must satisfy the
// numerical heart inequalities
struct HeartInterval {
  HeartInterval(Rat lo, Rat hi);  // throws std::invalid_argument if lo > hi

  Rat beta_lo, beta_hi;
};

// solution set of the wall-matching equation in e2 for a fixed (e0, e1):
// either finitely many values, or (degenerate pencil) every e2 except the
// listed ones, which collapse to no wall at all
struct E2Solutions {
  bool all_e2 = false;
  std::vector<Rat> values;    // meaningful when !all_e2
  std::vector<Rat> excluded;  // meaningful when all_e2

  bool empty() const { return !all_e2 && values.empty(); }
  bool operator==(const E2Solutions&) const = default;
};

struct ConstraintRecord {
  std::string name;
  bool passed = false;

  bool operator==(const ConstraintRecord&) const = default;
};

// outcome of testing one lattice pair (e0, e1) against the target wall
struct CandidateReport {
  Rat e0, e1;
  E2Solutions e2;
  std::vector<ConstraintRecord> constraints;
  std::optional<Rat> witness_e2;           // lattice-valid solution, if any
  std::optional<WallLocus> induced_wall;   // wall produced by witness_e2
  bool matches_target = false;

  bool operator==(const CandidateReport&) const = default;
};

// destabilization along the vertical line β = beta0: the lattice of
// attainable twisted-degree values intersected with [0, cap] decides
// whether any proper subobject can have finite slope there
struct VerticalLineCheck {
  bool applicable = false;
  Rat beta;
  Rat cap;                     // twisted e1 of the tested class at beta
  Rat step;                    // generator of the twisted-degree lattice
  std::vector<Rat> admissible; // attainable values in [0, cap]
  bool truncated = false;      // listing capped (stability still exact)
  bool degenerate = false;     // cap = 0
  bool stable = false;
  std::string note;
};

enum class Conclusion { CounterexampleConfirmed, WallCandidateFound, Inconclusive };

const char* conclusion_str(Conclusion c);

struct SearchOptions {
  bool line_bundle_bound = true;      // restrict to e0 ≥ v.e0 (subsheaf rank bound)
  Rat e0_cap_multiplier = 8;          // default e0 box: multiplier·max(|v.e0|, d0)
  std::optional<Rat> e0_max;          // absolute override for the box edge
  Rat region_margin = 0;              // witness safety margin in [0, 1)
  bool delta_filter = false;          // additionally require Δ ≥ 0 on candidate and quotient
  int workers = 0;                    // 0 = all available; 1 = serial reference path
  std::optional<Lattice> lattice_override;  // test hook; defaults to the preset lattice
};

struct VerificationReport {
  ChernVector v;
  WallLocus target;
  WallShape target_shape;
  Surd beta_lo, beta_hi;  // heart interval actually searched
  std::optional<VerticalLineCheck> vertical;
  std::vector<CandidateReport> candidates;
  // true when probes one lattice step beyond each box edge prove the
  // feasible e0 interval was fully covered (the e1 window is concave in
  // e0, so feasibility holds on an interval)
  bool enumeration_complete = false;
  Conclusion conclusion = Conclusion::Inconclusive;
  std::optional<TiltPoint> witness;
  Rat witness_q;
  std::vector<std::string> notes;
};

// lattice pairs (e0, e1) with e0 in [e0_min, e0_max] satisfying
// 0 ≤ e1 − β·e0 ≤ v.e1 − β·v.e0 at both interval endpoints (the heart
// inequalities are affine in β, so the endpoints decide the whole interval)
std::vector<std::pair<Rat, Rat>> heart_bounds(const ChernVector& v, const HeartInterval& I,
                                              const Rat& e0_min, const Rat& e0_max,
                                              const Lattice& lat);

// same with symbolic endpoints (wall extents c ± r with irrational r)
std::vector<std::pair<Rat, Rat>> heart_bounds_at(const ChernVector& v, const Surd& beta_lo,
                                                 const Surd& beta_hi, const Rat& e0_min,
                                                 const Rat& e0_max, const Lattice& lat);

// all e2 making wall_between(v, (e0, e1, e2, ·)) identical to `target`
// (which must be realizable; throws std::invalid_argument otherwise)
E2Solutions solve_e2_for_wall(const ChernVector& v, const Rat& e0, const Rat& e1,
                              const WallLocus& target);

// requires twist(v, beta0).e1 ≥ 0 (throws std::invalid_argument otherwise)
VerticalLineCheck vertical_ray_stable(const ChernVector& v, const Rat& beta0,
                                      const Lattice& lat);

// candidate evaluation over the heart box; OpenMP-parallel entry point and
// the plain serial reference, which must produce identical reports
std::vector<CandidateReport> enumerate_candidates(const ChernVector& v, const WallLocus& target,
                                                  const Surd& beta_lo, const Surd& beta_hi,
                                                  const Rat& e0_min, const Rat& e0_max,
                                                  const Lattice& lat, const SearchOptions& opt);
std::vector<CandidateReport> enumerate_candidates_serial(const ChernVector& v,
                                                         const WallLocus& target,
                                                         const Surd& beta_lo, const Surd& beta_hi,
                                                         const Rat& e0_min, const Rat& e0_max,
                                                         const Lattice& lat,
                                                         const SearchOptions& opt);

// full pipeline on a raw class against an explicit lattice
VerificationReport verify_class(const ChernVector& v, const Lattice& lat,
                                const SearchOptions& opt = {});

// full pipeline on a line bundle O(D) of the preset
VerificationReport verify_counterexample(const VarietyPreset& preset, const DivisorClass& d,
                                         const SearchOptions& opt = {});

bool reports_equal(const CandidateReport& a, const CandidateReport& b);

}  // namespace tiltwall
