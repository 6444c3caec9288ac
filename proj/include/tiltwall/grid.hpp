#pragma once

#include "tiltwall/chern.hpp"

#include <cstdint>
#include <vector>

namespace tiltwall {

// Rational evaluation grid over the (β, s) half-plane. Points are exact:
// row i, column j sits at (beta(i), s(j)) with affine rational spacing, so
// grids can be placed to hit a locus exactly.
struct GridSpec {
  Rat beta_min, beta_max;
  Rat s_min, s_max;
  int n_beta = 0, n_s = 0;
};

void validate(const GridSpec& g);  // throws std::invalid_argument

Rat grid_beta(const GridSpec& g, int i);
Rat grid_s(const GridSpec& g, int j);

// sign of the quadratic form at every grid point, row-major over (i, j);
// the parallel entry point and the serial reference must agree bit for bit
std::vector<std::int8_t> q_sign_grid(const ChernVector& v, const GridSpec& g, int workers = 0);
std::vector<std::int8_t> q_sign_grid_serial(const ChernVector& v, const GridSpec& g);

struct SignCounts {
  std::int64_t negative = 0, zero = 0, positive = 0;

  bool operator==(const SignCounts&) const = default;
};

SignCounts count_signs(const std::vector<std::int8_t>& signs);

}  // namespace tiltwall
