#include "tiltwall/grid.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <stdexcept>

namespace tiltwall {

void validate(const GridSpec& g) {
  if (g.n_beta < 1 || g.n_s < 1) throw std::invalid_argument("grid: counts must be positive");
  if (g.beta_min > g.beta_max || g.s_min > g.s_max)
    throw std::invalid_argument("grid: empty range");
  if (g.s_min < 0) throw std::invalid_argument("grid: s must be nonnegative");
  if (static_cast<std::int64_t>(g.n_beta) * g.n_s > 64'000'000)
    throw std::invalid_argument("grid: too many points");
}

Rat grid_beta(const GridSpec& g, int i) {
  if (g.n_beta == 1) return g.beta_min;
  return g.beta_min + Rat(i) * (g.beta_max - g.beta_min) / (g.n_beta - 1);
}

Rat grid_s(const GridSpec& g, int j) {
  if (g.n_s == 1) return g.s_min;
  return g.s_min + Rat(j) * (g.s_max - g.s_min) / (g.n_s - 1);
}

std::vector<std::int8_t> q_sign_grid_serial(const ChernVector& v, const GridSpec& g) {
  validate(g);
  std::vector<std::int8_t> out;
  out.reserve(static_cast<size_t>(g.n_beta) * static_cast<size_t>(g.n_s));
  for (int i = 0; i < g.n_beta; ++i) {
    Rat beta = grid_beta(g, i);
    for (int j = 0; j < g.n_s; ++j)
      out.push_back(static_cast<std::int8_t>(sign_of(q_form(v, TiltPoint(grid_s(g, j), beta)))));
  }
  return out;
}

std::vector<std::int8_t> q_sign_grid(const ChernVector& v, const GridSpec& g, int workers) {
  if (workers == 1) return q_sign_grid_serial(v, g);
  validate(g);
  const std::int64_t total = static_cast<std::int64_t>(g.n_beta) * g.n_s;
  std::vector<std::int8_t> out(static_cast<size_t>(total));
#ifdef _OPENMP
  int n = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(n)
  for (std::int64_t idx = 0; idx < total; ++idx) {
    int i = static_cast<int>(idx / g.n_s);
    int j = static_cast<int>(idx % g.n_s);
    out[static_cast<size_t>(idx)] =
        static_cast<std::int8_t>(sign_of(q_form(v, TiltPoint(grid_s(g, j), grid_beta(g, i)))));
  }
#else
  for (std::int64_t idx = 0; idx < total; ++idx) {
    int i = static_cast<int>(idx / g.n_s);
    int j = static_cast<int>(idx % g.n_s);
    out[static_cast<size_t>(idx)] =
        static_cast<std::int8_t>(sign_of(q_form(v, TiltPoint(grid_s(g, j), grid_beta(g, i)))));
  }
#endif
  return out;
}

SignCounts count_signs(const std::vector<std::int8_t>& signs) {
  SignCounts c;
  for (std::int8_t s : signs) {
    if (s < 0)
      ++c.negative;
    else if (s > 0)
      ++c.positive;
    else
      ++c.zero;
  }
  return c;
}

}  // namespace tiltwall
