#pragma once

#include "tiltwall/chern.hpp"
#include "tiltwall/rational.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tiltwall {

// Divisor class on a Picard-rank ≤ 2 basis (L, E). Rank-1 presets simply
// require e = 0. Coefficients are rationals so that non-integral input can
// be detected and reported instead of silently truncated.
struct DivisorClass {
  Rat l, e;

  bool operator==(const DivisorClass&) const = default;
};

struct NonIntegralDivisor : std::domain_error {
  using std::domain_error::domain_error;
};

struct PresetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Moduli (d0, d1, d2, d3): component i of an integral-class Chern vector
// lies in d_i·Z. Drives every enumeration step size in the search module.
class Lattice {
 public:
  explicit Lattice(std::array<Rat, 4> steps);

  const Rat& step(int i) const { return steps_.at(static_cast<size_t>(i)); }
  bool contains(int i, const Rat& value) const { return on_lattice(value, step(i)); }
  bool contains(const ChernVector& v) const;

  bool operator==(const Lattice&) const = default;

 private:
  std::array<Rat, 4> steps_;
};

// Numerical data of a polarized threefold: trilinear intersection table on
// the divisor basis, polarization H, and the Chern lattice. Loaded from a
// JSON preset (or one of the built-ins), after which all geometry questions
// reduce to rational arithmetic on the table.
class VarietyPreset {
 public:
  static VarietyPreset builtin(const std::string& name);  // "blowup-p3" | "p3"
  static VarietyPreset from_json_text(const std::string& text);  // throws PresetError
  // builtin name first, then filesystem path
  static VarietyPreset load(const std::string& name_or_path);
  static const std::array<const char*, 2>& builtin_names();

  const std::string& name() const { return name_; }
  int picard_rank() const { return rank_; }
  const DivisorClass& polarization() const { return h_; }
  const Lattice& lattice() const { return lattice_; }

  // full symmetric trilinear extension of the intersection table
  Rat triple(const DivisorClass& a, const DivisorClass& b, const DivisorClass& c) const;

  // (H³, H²·D, H·D²/2, D³/6); throws NonIntegralDivisor unless D has
  // integer coordinates
  ChernVector chern_of_line_bundle(const DivisorClass& d) const;

  bool lattice_check(const ChernVector& v) const { return lattice_.contains(v); }

  // membership in the ample cone; exact for the shipped presets (whose nef
  // cones are known), a positivity heuristic (D³, D²·H, D·H² > 0) otherwise
  bool ample_check(const DivisorClass& d) const;

 private:
  VarietyPreset(std::string name, int rank, std::array<Rat, 4> table, DivisorClass h,
                Lattice lattice);
  void validate() const;

  std::string name_;
  int rank_;
  // symmetric table by E-multiplicity: [LLL, LLE, LEE, EEE]
  std::array<Rat, 4> table_;
  DivisorClass h_;
  Lattice lattice_;
};

// "[+|-]<coeff>L[+|-]<coeff>E" with optional integer or p/q coefficients,
// bare letters meaning 1, whitespace ignored; each letter at most once;
// rank-1 presets reject E terms
std::optional<DivisorClass> parse_divisor(std::string_view text, int rank);

std::string divisor_str(const DivisorClass& d);

// "e0,e1,e2,e3" with rational components
std::optional<ChernVector> parse_chern(std::string_view text);

}  // namespace tiltwall
