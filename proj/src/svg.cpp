#include "tiltwall/svg.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tiltwall {

namespace {

constexpr double kMargin = 48.0;

std::string fmt(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  if (ec != std::errc{}) return "0";
  return std::string(buf, ptr);
}

struct Mapping {
  double beta_min, alpha_min, scale, origin_x, origin_y;

  double px(double beta) const { return origin_x + (beta - beta_min) * scale; }
  double py(double alpha) const { return origin_y - (alpha - alpha_min) * scale; }
};

Mapping make_mapping(const PlotSpec& spec) {
  double db = to_double(spec.beta_max - spec.beta_min);
  double da = to_double(spec.alpha_max - spec.alpha_min);
  double avail_w = spec.width - 2 * kMargin;
  double avail_h = spec.height - 2 * kMargin;
  double scale = std::min(avail_w / db, avail_h / da);  // isotropic: circles stay circles
  return {to_double(spec.beta_min), to_double(spec.alpha_min), scale, kMargin,
          spec.height - kMargin};
}

void line(std::ostringstream& out, double x1, double y1, double x2, double y2,
          const char* style) {
  out << "  <line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
      << "\" y2=\"" << fmt(y2) << "\" " << style << "/>\n";
}

void text(std::ostringstream& out, double x, double y, const std::string& body) {
  out << "  <text x=\"" << fmt(x) << "\" y=\"" << fmt(y)
      << "\" font-size=\"11\" font-family=\"monospace\" fill=\"#333\">" << body << "</text>\n";
}

void circle_element(std::ostringstream& out, const Mapping& m, const WallShape& s,
                    const char* cls, const char* style) {
  double c = to_double(s.center);
  double r = std::sqrt(to_double(s.radius_sq));
  out << "  <circle class=\"" << cls << "\" cx=\"" << fmt(m.px(c)) << "\" cy=\"" << fmt(m.py(0))
      << "\" r=\"" << fmt(r * m.scale) << "\" " << style << " clip-path=\"url(#plot-area)\"/>\n";
}

}  // namespace

void validate(const PlotSpec& spec) {
  if (spec.beta_min >= spec.beta_max || spec.alpha_min >= spec.alpha_max)
    throw std::invalid_argument("plot: empty viewport");
  if (spec.alpha_min < 0) throw std::invalid_argument("plot: alpha range must be nonnegative");
  if (spec.width < 160 || spec.height < 120) throw std::invalid_argument("plot: canvas too small");
}

PlotSpec default_plot_spec(const std::optional<WallLocus>& boundary) {
  PlotSpec spec;
  if (!boundary) return spec;
  WallShape s = shape(*boundary);
  if (s.kind == WallKind::Semicircle) {
    Rat r_ub = sqrt_upper_bound(s.radius_sq, 16);
    spec.beta_min = s.center - 2 * r_ub;
    spec.beta_max = s.center + 2 * r_ub;
    spec.alpha_min = 0;
    spec.alpha_max = 3 * r_ub / 2;
  } else if (s.kind == WallKind::VerticalLine) {
    spec.beta_min = s.beta - 1;
    spec.beta_max = s.beta + 1;
  }
  return spec;
}

std::string render_svg(const PlotSpec& spec, const PlotItems& items) {
  validate(spec);
  Mapping m = make_mapping(spec);
  double plot_w = to_double(spec.beta_max - spec.beta_min) * m.scale;
  double plot_h = to_double(spec.alpha_max - spec.alpha_min) * m.scale;
  double top = m.origin_y - plot_h;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
      << spec.height << "\" viewBox=\"0 0 " << spec.width << " " << spec.height << "\""
      << " data-beta-min=\"" << fmt(m.beta_min) << "\" data-alpha-min=\"" << fmt(m.alpha_min)
      << "\" data-scale=\"" << fmt(m.scale) << "\" data-origin-x=\"" << fmt(m.origin_x)
      << "\" data-origin-y=\"" << fmt(m.origin_y) << "\">\n";
  out << "  <defs><clipPath id=\"plot-area\"><rect x=\"" << fmt(m.origin_x) << "\" y=\""
      << fmt(top) << "\" width=\"" << fmt(plot_w) << "\" height=\"" << fmt(plot_h)
      << "\"/></clipPath></defs>\n";
  out << "  <rect x=\"" << fmt(m.origin_x) << "\" y=\"" << fmt(top) << "\" width=\""
      << fmt(plot_w) << "\" height=\"" << fmt(plot_h)
      << "\" fill=\"white\" stroke=\"#888\" stroke-width=\"1\"/>\n";

  // axes: the bottom edge is α = alpha_min; draw the β = 0 axis when visible
  line(out, m.origin_x, m.origin_y, m.origin_x + plot_w, m.origin_y,
       "stroke=\"#333\" stroke-width=\"1\"");
  if (spec.beta_min < 0 && spec.beta_max > 0)
    line(out, m.px(0), top, m.px(0), m.origin_y, "stroke=\"#bbb\" stroke-width=\"1\"");

  // tick labels at the viewport corners
  text(out, m.origin_x - 4, m.origin_y + 16, fmt(m.beta_min));
  text(out, m.origin_x + plot_w - 24, m.origin_y + 16, fmt(to_double(spec.beta_max)));
  text(out, 4, m.origin_y + 4, fmt(m.alpha_min));
  text(out, 4, top + 4, fmt(to_double(spec.alpha_max)));
  text(out, m.origin_x + plot_w / 2 - 20, static_cast<double>(spec.height) - 8, "beta");
  text(out, 4, top - 8, "alpha");

  if (items.boundary) {
    WallShape s = shape(*items.boundary);
    if (s.kind == WallKind::Semicircle) {
      if (items.shade_negative)
        circle_element(out, m, s, "negative-region", "fill=\"#d62728\" fill-opacity=\"0.15\" stroke=\"none\"");
      circle_element(out, m, s, "q-boundary", "fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\"");
    } else if (s.kind == WallKind::VerticalLine) {
      line(out, m.px(to_double(s.beta)), top, m.px(to_double(s.beta)), m.origin_y,
           "class=\"q-boundary\" stroke=\"#d62728\" stroke-width=\"1.5\"");
    }
  }

  for (const WallLocus& w : items.walls) {
    WallShape s = shape(w);
    if (s.kind == WallKind::Semicircle) {
      circle_element(out, m, s, "wall", "fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\"");
    } else if (s.kind == WallKind::VerticalLine) {
      line(out, m.px(to_double(s.beta)), top, m.px(to_double(s.beta)), m.origin_y,
           "class=\"wall\" stroke=\"#1f77b4\" stroke-width=\"1\"");
    }
  }

  if (items.witness) {
    double alpha = std::sqrt(to_double(items.witness->s()));  // floats appear only here
    out << "  <circle class=\"witness\" cx=\"" << fmt(m.px(to_double(items.witness->beta())))
        << "\" cy=\"" << fmt(m.py(alpha))
        << "\" r=\"3\" fill=\"#2ca02c\" stroke=\"#145214\" stroke-width=\"1\"/>\n";
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace tiltwall
