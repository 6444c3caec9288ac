#pragma once

// Test-only reference implementations, deliberately independent of the
// production code paths they check: a dense polynomial type for symbolic
// identities in beta, a brute-force heart-box enumerator, and a
// deterministic RNG (mt19937_64 with modulo reduction, so sequences are
// identical across platforms).

#include "tiltwall/chern.hpp"
#include "tiltwall/surd.hpp"
#include "tiltwall/variety.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using tiltwall::ChernVector;
using tiltwall::Int;
using tiltwall::Lattice;
using tiltwall::Rat;
using tiltwall::Surd;

// dense univariate polynomial over Q; coefficient i multiplies x^i
struct Poly {
  std::vector<Rat> c;

  static Poly constant(const Rat& v) { return {{v}}; }
  static Poly x() { return {{0, 1}}; }

  Rat coeff(size_t i) const { return i < c.size() ? c[i] : Rat(0); }
  size_t degree() const {
    size_t d = c.size();
    while (d > 0 && c[d - 1] == 0) --d;
    return d == 0 ? 0 : d - 1;
  }

  Rat eval(const Rat& t) const {
    Rat acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
    return acc;
  }

  friend Poly operator+(const Poly& p, const Poly& q) {
    Poly r;
    r.c.resize(std::max(p.c.size(), q.c.size()), Rat(0));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = p.coeff(i) + q.coeff(i);
    return r;
  }
  friend Poly operator-(const Poly& p, const Poly& q) {
    Poly r;
    r.c.resize(std::max(p.c.size(), q.c.size()), Rat(0));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = p.coeff(i) - q.coeff(i);
    return r;
  }
  friend Poly operator*(const Poly& p, const Poly& q) {
    Poly r;
    if (p.c.empty() || q.c.empty()) return r;
    r.c.resize(p.c.size() + q.c.size() - 1, Rat(0));
    for (size_t i = 0; i < p.c.size(); ++i)
      for (size_t j = 0; j < q.c.size(); ++j) r.c[i + j] += p.c[i] * q.c[j];
    return r;
  }
  friend Poly operator*(const Rat& s, const Poly& p) {
    Poly r = p;
    for (auto& v : r.c) v *= s;
    return r;
  }

  friend bool operator==(const Poly& p, const Poly& q) {
    size_t n = std::max(p.c.size(), q.c.size());
    for (size_t i = 0; i < n; ++i)
      if (p.coeff(i) != q.coeff(i)) return false;
    return true;
  }
};

// the quadratic form of v at (s, beta) expanded symbolically in beta from
// the raw twist definition: s·Δ + 4·w2(β)² − 6·w1(β)·w3(β)
inline Poly q_form_poly(const ChernVector& v, const Rat& s) {
  Poly b = Poly::x();
  Poly e0 = Poly::constant(v.e0), e1 = Poly::constant(v.e1);
  Poly e2 = Poly::constant(v.e2), e3 = Poly::constant(v.e3);
  Poly w1 = e1 - b * e0;
  Poly w2 = e2 - b * e1 + Rat(1, 2) * (b * b * e0);
  Poly w3 = e3 - b * e2 + Rat(1, 2) * (b * b * e1) - Rat(1, 6) * (b * b * b * e0);
  Rat delta = v.e1 * v.e1 - 2 * v.e0 * v.e2;
  return Poly::constant(s * delta) + Rat(4) * (w2 * w2) - Rat(6) * (w1 * w3);
}

// Lattice pairs (e0, e1) with e0 in [e0_min, e0_max] and
// 0 ≤ e1 − β·e0 ≤ v.e1 − β·v.e0 at both endpoints, found by scanning a
// padded integer window (from coarse double enclosures of the endpoints)
// and filtering each pair with exact surd sign tests.
inline std::vector<std::pair<Rat, Rat>> heart_pairs_brute(const ChernVector& v, const Surd& lo,
                                                          const Surd& hi, const Rat& e0_min,
                                                          const Rat& e0_max, const Lattice& lat) {
  std::vector<std::pair<Rat, Rat>> out;
  const Rat d0 = lat.step(0), d1 = lat.step(1);
  auto ok = [&](const Rat& e0, const Rat& e1) {
    for (const Surd* b : {&lo, &hi}) {
      Surd tw = Rat(e1) - *b * e0;                    // e1 − β·e0
      Surd cap = Rat(v.e1) - *b * v.e0;               // v.e1 − β·v.e0
      if (tw.sign() < 0 || (cap - tw).sign() < 0) return false;
    }
    return true;
  };
  Int k_lo = tiltwall::ceil_rat(e0_min / d0), k_hi = tiltwall::floor_rat(e0_max / d0);
  double blo = lo.approx(), bhi = hi.approx();
  for (Int k = k_lo; k <= k_hi; ++k) {
    Rat e0 = Rat(k) * d0;
    // coarse e1 window: min/max of β·e0 and v.e1 + β·(e0 − v.e0) over both
    // endpoints, padded by 2 lattice steps against rounding of the doubles
    double e0d = tiltwall::to_double(e0), v0d = tiltwall::to_double(v.e0);
    double v1d = tiltwall::to_double(v.e1), d1d = tiltwall::to_double(d1);
    double m_lo = std::min(blo * e0d, bhi * e0d);
    double m_hi = std::max(v1d + blo * (e0d - v0d), v1d + bhi * (e0d - v0d));
    long long m_first = static_cast<long long>(std::floor(m_lo / d1d)) - 2;
    long long m_last = static_cast<long long>(std::ceil(m_hi / d1d)) + 2;
    for (long long m = m_first; m <= m_last; ++m) {
      Rat e1 = Rat(m) * d1;
      if (ok(e0, e1)) out.emplace_back(e0, e1);
    }
  }
  return out;
}

// deterministic RNG; modulo bias is irrelevant for test-case generation
struct Rng {
  std::mt19937_64 g;

  explicit Rng(std::uint64_t seed) : g(seed) {}

  long long ll(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(g() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rat rational(long long num_lo, long long num_hi, long long den_hi) {
    return Rat(ll(num_lo, num_hi), ll(1, den_hi));
  }

  ChernVector chern(long long bound, long long den_hi) {
    return {rational(-bound, bound, den_hi), rational(-bound, bound, den_hi),
            rational(-bound, bound, den_hi), rational(-bound, bound, den_hi)};
  }
};

}  // namespace oracle
