#pragma once

#include "tiltwall/chern.hpp"
#include "tiltwall/walls.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tiltwall {

// Viewport of a (β, α)-plane picture. Ranges stay rational; the renderer is
// the single place in the library where values become floats. The scale is
// isotropic so circles render as <circle> elements.
struct PlotSpec {
  Rat beta_min = -1, beta_max = 1;
  Rat alpha_min = 0, alpha_max = 1;
  int width = 720, height = 480;
};

void validate(const PlotSpec& spec);  // throws std::invalid_argument

struct PlotItems {
  std::optional<WallLocus> boundary;      // quadratic-form zero locus
  bool shade_negative = true;             // tint the region below `boundary`
  std::optional<TiltPoint> witness;       // marked point
  std::vector<WallLocus> walls;           // additional numerical walls
};

// viewport that frames the boundary locus comfortably (or a unit window)
PlotSpec default_plot_spec(const std::optional<WallLocus>& boundary);

// standalone SVG document; numbers are emitted with std::to_chars, so the
// output is locale-independent and reproducible byte for byte
std::string render_svg(const PlotSpec& spec, const PlotItems& items);

}  // namespace tiltwall
