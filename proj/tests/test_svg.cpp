#include <doctest.h>

#include "tiltwall/svg.hpp"
#include "tiltwall/walls.hpp"

#include <cmath>
#include <string>

using namespace tiltwall;

namespace {

const WallLocus kBoundary{2, -1, 0};

// pull a numeric attribute like cx="123.5" out of the element containing the marker
double attr(const std::string& svg, const std::string& element_marker, const std::string& name) {
  size_t at = svg.find(element_marker);
  REQUIRE(at != std::string::npos);
  size_t elem_start = svg.rfind('<', at);
  size_t elem_end = svg.find('>', at);
  REQUIRE(elem_start != std::string::npos);
  REQUIRE(elem_end != std::string::npos);
  std::string elem = svg.substr(elem_start, elem_end - elem_start);
  size_t key = elem.find(" " + name + "=\"");
  REQUIRE(key != std::string::npos);
  size_t start = key + name.size() + 3;
  size_t end = elem.find('"', start);
  return std::stod(elem.substr(start, end - start));
}

int count_of(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (size_t at = hay.find(needle); at != std::string::npos; at = hay.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("default viewport frames the boundary") {
  PlotSpec spec = default_plot_spec(kBoundary);
  // radius 1/4 is exact, so the window is [c − 2r, c + 2r] × [0, 3r/2]
  CHECK(spec.beta_min == rat(-1, 4));
  CHECK(spec.beta_max == rat(3, 4));
  CHECK(spec.alpha_min == 0);
  CHECK(spec.alpha_max == rat(3, 8));

  PlotSpec fallback = default_plot_spec(std::nullopt);
  CHECK(fallback.beta_min == -1);
  CHECK(fallback.beta_max == 1);
}

TEST_CASE("viewport validation") {
  PlotSpec s;
  s.beta_min = 1;
  s.beta_max = 1;
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
  s = PlotSpec{};
  s.alpha_min = rat(-1, 2);
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
  s = PlotSpec{};
  s.width = 10;
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
}

TEST_CASE("geometry round-trips through the data attributes") {
  PlotItems items;
  items.boundary = kBoundary;
  items.witness = TiltPoint(rat(1, 64), rat(1, 4));
  items.walls.push_back(WallLocus{0, 7, -4});
  std::string svg = render_svg(default_plot_spec(kBoundary), items);

  double beta_min = attr(svg, "<svg", "data-beta-min");
  double alpha_min = attr(svg, "<svg", "data-alpha-min");
  double scale = attr(svg, "<svg", "data-scale");
  double ox = attr(svg, "<svg", "data-origin-x");
  double oy = attr(svg, "<svg", "data-origin-y");
  CHECK(beta_min == -0.25);
  CHECK(alpha_min == 0.0);
  CHECK(scale > 0);

  // boundary circle: center (1/4, 0), radius 1/4, rendered isotropically
  double cx = attr(svg, "class=\"q-boundary\"", "cx");
  double cy = attr(svg, "class=\"q-boundary\"", "cy");
  double r = attr(svg, "class=\"q-boundary\"", "r");
  CHECK(std::abs((cx - ox) / scale + beta_min - 0.25) < 1e-9);
  CHECK(std::abs((oy - cy) / scale + alpha_min - 0.0) < 1e-9);
  CHECK(std::abs(r / scale - 0.25) < 1e-9);

  // witness marker at (β, α) = (1/4, 1/8): α = √(1/64)
  double wx = attr(svg, "class=\"witness\"", "cx");
  double wy = attr(svg, "class=\"witness\"", "cy");
  CHECK(std::abs((wx - ox) / scale + beta_min - 0.25) < 1e-9);
  CHECK(std::abs((oy - wy) / scale + alpha_min - 0.125) < 1e-9);

  // vertical wall at β = 4/7
  double lx = attr(svg, "class=\"wall\"", "x1");
  CHECK(std::abs((lx - ox) / scale + beta_min - 4.0 / 7.0) < 1e-9);
}

TEST_CASE("element inventory follows the item list") {
  PlotItems full;
  full.boundary = kBoundary;
  full.witness = TiltPoint(rat(1, 64), rat(1, 4));
  full.walls.push_back(WallLocus{0, 7, -4});
  full.walls.push_back(WallLocus{1, -2, 0});
  std::string svg = render_svg(default_plot_spec(kBoundary), full);
  CHECK(count_of(svg, "class=\"q-boundary\"") == 1);
  CHECK(count_of(svg, "class=\"negative-region\"") == 1);
  CHECK(count_of(svg, "class=\"witness\"") == 1);
  CHECK(count_of(svg, "class=\"wall\"") == 2);

  PlotItems bare;
  std::string axes = render_svg(PlotSpec{}, bare);
  CHECK(count_of(axes, "class=\"q-boundary\"") == 0);
  CHECK(count_of(axes, "class=\"negative-region\"") == 0);
  CHECK(count_of(axes, "class=\"witness\"") == 0);
  CHECK(count_of(axes, "class=\"wall\"") == 0);
  CHECK(axes.find("<svg") == 0);

  PlotItems unshaded;
  unshaded.boundary = kBoundary;
  unshaded.shade_negative = false;
  std::string svg2 = render_svg(default_plot_spec(kBoundary), unshaded);
  CHECK(count_of(svg2, "class=\"q-boundary\"") == 1);
  CHECK(count_of(svg2, "class=\"negative-region\"") == 0);
}

TEST_CASE("document is well formed and locale independent") {
  PlotItems items;
  items.boundary = kBoundary;
  items.witness = TiltPoint(rat(1, 3), rat(-1, 7));  // awkward decimals
  std::string svg = render_svg(default_plot_spec(kBoundary), items);

  CHECK(count_of(svg, "<svg") == 1);
  CHECK(count_of(svg, "</svg>") == 1);
  CHECK(count_of(svg, "<text") == count_of(svg, "</text>"));
  CHECK(count_of(svg, "<circle") == 3);  // shaded region, boundary stroke, witness
  // every self-closing element is closed
  CHECK(count_of(svg, "/>") ==
        count_of(svg, "<circle") + count_of(svg, "<line") + count_of(svg, "<rect"));
  CHECK(svg.find("NaN") == std::string::npos);
  CHECK(svg.find("inf") == std::string::npos);
  // decimal commas would break SVG parsing
  for (size_t at = svg.find('"'); at != std::string::npos;) {
    size_t end = svg.find('"', at + 1);
    REQUIRE(end != std::string::npos);
    std::string val = svg.substr(at + 1, end - at - 1);
    if (!val.empty() && (std::isdigit(static_cast<unsigned char>(val[0])) || val[0] == '-'))
      CHECK(val.find(',') == std::string::npos);
    at = svg.find('"', end + 1);
  }

  // byte-identical across calls
  CHECK(render_svg(default_plot_spec(kBoundary), items) == svg);
}
