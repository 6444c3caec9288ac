// tiltwall — exact tilt-stability computations on polarized threefolds.
//
// Exit codes: 0 success / counterexample confirmed, 1 wall candidate found,
// 2 malformed input, 3 non-integral divisor, 4 inconclusive verification,
// 5 strict lattice violation, 6 plot I/O failure.

#include <CLI11.hpp>

#include "tiltwall/json_io.hpp"
#include "tiltwall/svg.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace tw = tiltwall;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kWallCandidate = 1;
constexpr int kBadInput = 2;
constexpr int kNonIntegral = 3;
constexpr int kInconclusive = 4;
constexpr int kLatticeViolation = 5;
constexpr int kPlotIo = 6;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, std::string message) { throw CliError{code, std::move(message)}; }

struct CommonOpts {
  std::string variety = "blowup-p3";
  int json_indent = -1;
  bool strict = false;
  int workers = 0;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--variety", c.variety, "builtin preset name (blowup-p3, p3) or JSON file path");
  cmd->add_option("--json-indent", c.json_indent, "pretty-print indent; negative for compact");
  cmd->add_flag("--strict", c.strict, "reject raw classes outside the Chern lattice (exit 5)");
  cmd->add_option("--workers", c.workers, "worker threads for enumeration/scan (0 = all, 1 = serial)");
}

void emit(const json& j, const CommonOpts& c) {
  std::cout << tw::dump_json(j, c.json_indent) << "\n";
}

tw::Rat parse_rat_arg(const std::string& text, const std::string& what) {
  auto r = tw::parse_rat(text);
  if (!r) fail(kBadInput, "cannot parse " + what + ": '" + text + "' (expected p/q or integer)");
  return *r;
}

// Resolves --divisor / --v input to a Chern vector. Divisor input implies
// the line-bundle rank bound by default; raw classes do not.
struct ClassInput {
  std::string divisor_text;
  std::string chern_text;

  bool from_divisor() const { return !divisor_text.empty(); }

  tw::ChernVector resolve(const tw::VarietyPreset& preset, bool strict) const {
    if (divisor_text.empty() && chern_text.empty())
      fail(kBadInput, "provide a class via --divisor or --v");
    if (!divisor_text.empty() && !chern_text.empty())
      fail(kBadInput, "--divisor and --v are mutually exclusive");
    if (!divisor_text.empty()) {
      auto d = tw::parse_divisor(divisor_text, preset.picard_rank());
      if (!d)
        fail(kBadInput, "cannot parse divisor '" + divisor_text + "' on basis of rank " +
                            std::to_string(preset.picard_rank()));
      return preset.chern_of_line_bundle(*d);  // NonIntegralDivisor → exit 3
    }
    auto v = tw::parse_chern(chern_text);
    if (!v) fail(kBadInput, "cannot parse class '" + chern_text + "' (expected e0,e1,e2,e3)");
    if (strict && !preset.lattice_check(*v))
      fail(kLatticeViolation, "class " + chern_text + " violates the Chern lattice of " +
                                  preset.name());
    return *v;
  }
};

void add_class_input(CLI::App* cmd, ClassInput& in, bool divisor_only = false) {
  cmd->add_option("--divisor", in.divisor_text, "divisor in the preset basis, e.g. L, 2L-E");
  if (!divisor_only)
    cmd->add_option("--v", in.chern_text, "raw class e0,e1,e2,e3 with rational components");
}

tw::VarietyPreset load_preset(const std::string& name_or_path) {
  return tw::VarietyPreset::load(name_or_path);  // PresetError → exit 2
}

int run_chern(const CommonOpts& c, const ClassInput& in) {
  auto preset = load_preset(c.variety);
  emit(tw::chern_json(in.resolve(preset, c.strict)), c);
  return kOk;
}

int run_qwall(const CommonOpts& c, const ClassInput& in) {
  auto preset = load_preset(c.variety);
  emit(tw::wall_json(tw::q_wall(in.resolve(preset, c.strict))), c);
  return kOk;
}

int run_wall(const CommonOpts& c, const std::string& v_text, const std::string& w_text) {
  auto preset = load_preset(c.variety);
  auto parse = [&](const std::string& text, const char* what) {
    auto v = tw::parse_chern(text);
    if (!v) fail(kBadInput, std::string("cannot parse ") + what + " '" + text + "'");
    if (c.strict && !preset.lattice_check(*v))
      fail(kLatticeViolation, std::string(what) + " violates the Chern lattice of " + preset.name());
    return *v;
  };
  tw::ChernVector v = parse(v_text, "--v"), w = parse(w_text, "--w");
  auto wall = tw::wall_between(v, w);
  emit(wall ? tw::wall_json(*wall) : json(nullptr), c);
  return kOk;
}

int run_scan(const CommonOpts& c, const ClassInput& in, tw::GridSpec grid,
             const std::vector<std::string>& overrides) {
  auto preset = load_preset(c.variety);
  tw::ChernVector v = in.resolve(preset, c.strict);
  tw::WallLocus boundary = tw::q_wall(v);
  tw::WallShape s = tw::shape(boundary);

  // default window framing the boundary locus, then explicit overrides
  if (s.kind == tw::WallKind::Semicircle) {
    tw::Rat r_ub = tw::sqrt_upper_bound(s.radius_sq, 16);
    grid.beta_min = s.center - 2 * r_ub;
    grid.beta_max = s.center + 2 * r_ub;
    grid.s_min = 0;
    grid.s_max = 2 * s.radius_sq;
  } else if (s.kind == tw::WallKind::VerticalLine) {
    grid.beta_min = s.beta - 1;
    grid.beta_max = s.beta + 1;
    grid.s_min = 0;
    grid.s_max = 1;
  } else {
    grid.beta_min = -1;
    grid.beta_max = 1;
    grid.s_min = 0;
    grid.s_max = 1;
  }
  if (!overrides[0].empty()) grid.beta_min = parse_rat_arg(overrides[0], "--beta-min");
  if (!overrides[1].empty()) grid.beta_max = parse_rat_arg(overrides[1], "--beta-max");
  if (!overrides[2].empty()) grid.s_min = parse_rat_arg(overrides[2], "--s-min");
  if (!overrides[3].empty()) grid.s_max = parse_rat_arg(overrides[3], "--s-max");

  auto signs = tw::q_sign_grid(v, grid, c.workers);
  json j{{"class", tw::chern_json(v)},
         {"counts", tw::counts_json(tw::count_signs(signs))},
         {"grid", tw::grid_json(grid)},
         {"q_wall", tw::wall_json(boundary)}};
  emit(j, c);
  return kOk;
}

int run_verify(const CommonOpts& c, const ClassInput& in, tw::SearchOptions opt,
               const std::string& e0_max_text, const std::string& margin_text) {
  auto preset = load_preset(c.variety);
  tw::ChernVector v = in.resolve(preset, c.strict);
  if (!e0_max_text.empty()) opt.e0_max = parse_rat_arg(e0_max_text, "--e0-max");
  if (!margin_text.empty()) opt.region_margin = parse_rat_arg(margin_text, "--region-margin");
  opt.workers = c.workers;

  tw::VerificationReport rep = tw::verify_class(v, preset.lattice(), opt);
  json j = tw::report_json(rep);
  j["variety"] = preset.name();
  j["divisor"] = in.from_divisor() ? json(in.divisor_text) : json(nullptr);
  emit(j, c);
  switch (rep.conclusion) {
    case tw::Conclusion::CounterexampleConfirmed: return kOk;
    case tw::Conclusion::WallCandidateFound: return kWallCandidate;
    case tw::Conclusion::Inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

int run_plot(const CommonOpts& c, const ClassInput& in, const std::string& out_path,
             tw::PlotSpec spec, const std::vector<std::string>& range_overrides,
             const std::vector<std::string>& with_walls, bool no_boundary, bool no_shade,
             bool no_witness) {
  auto preset = load_preset(c.variety);
  tw::PlotItems items;
  std::optional<tw::ChernVector> v;
  if (in.from_divisor() || !in.chern_text.empty()) v = in.resolve(preset, c.strict);

  if (v && !no_boundary) {
    tw::WallLocus boundary = tw::q_wall(*v);
    if (tw::shape(boundary).kind != tw::WallKind::Empty) {
      items.boundary = boundary;
      items.shade_negative = !no_shade;
      tw::WallShape s = tw::shape(boundary);
      if (!no_witness && s.kind == tw::WallKind::Semicircle)
        items.witness = tw::TiltPoint(s.radius_sq / 4, s.center);
    }
  }
  if (!with_walls.empty() && !v) fail(kBadInput, "--with-wall requires a base class");
  for (const std::string& text : with_walls) {
    auto w = tw::parse_chern(text);
    if (!w) fail(kBadInput, "cannot parse --with-wall class '" + text + "'");
    if (c.strict && !preset.lattice_check(*w))
      fail(kLatticeViolation, "--with-wall class violates the Chern lattice of " + preset.name());
    auto wall = tw::wall_between(*v, *w);
    if (wall && tw::realizable(*wall)) items.walls.push_back(*wall);
  }

  tw::PlotSpec defaults = tw::default_plot_spec(items.boundary);
  spec.beta_min = defaults.beta_min;
  spec.beta_max = defaults.beta_max;
  spec.alpha_min = defaults.alpha_min;
  spec.alpha_max = defaults.alpha_max;
  if (!range_overrides[0].empty()) spec.beta_min = parse_rat_arg(range_overrides[0], "--beta-min");
  if (!range_overrides[1].empty()) spec.beta_max = parse_rat_arg(range_overrides[1], "--beta-max");
  if (!range_overrides[2].empty()) spec.alpha_max = parse_rat_arg(range_overrides[2], "--alpha-max");

  std::string svg = tw::render_svg(spec, items);
  std::ofstream out(out_path);
  out << svg;
  out.flush();
  if (!out) fail(kPlotIo, "cannot write SVG to '" + out_path + "'");

  json j{{"out", out_path},
         {"width", spec.width},
         {"height", spec.height},
         {"elements", json{{"boundary", items.boundary.has_value()},
                           {"shaded", items.boundary.has_value() && items.shade_negative},
                           {"witness", items.witness.has_value()},
                           {"walls", items.walls.size()}}}};
  emit(j, c);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tilt-stability walls and quadratic-form analysis on polarized threefolds"};
  app.require_subcommand(1);

  CommonOpts chern_opts;
  ClassInput chern_in;
  auto* chern_cmd = app.add_subcommand("chern", "Chern vector (e0,e1,e2,e3) of a line bundle");
  add_common(chern_cmd, chern_opts);
  add_class_input(chern_cmd, chern_in, /*divisor_only=*/true);

  CommonOpts qwall_opts;
  ClassInput qwall_in;
  auto* qwall_cmd = app.add_subcommand("q-wall", "zero locus of the quadratic form of a class");
  add_common(qwall_cmd, qwall_opts);
  add_class_input(qwall_cmd, qwall_in);

  CommonOpts wall_opts;
  std::string wall_v, wall_w;
  auto* wall_cmd = app.add_subcommand("wall", "numerical wall between two classes");
  add_common(wall_cmd, wall_opts);
  wall_cmd->add_option("--v", wall_v, "first class e0,e1,e2,e3")->required();
  wall_cmd->add_option("--w", wall_w, "second class e0,e1,e2,e3")->required();

  CommonOpts scan_opts;
  ClassInput scan_in;
  tw::GridSpec scan_grid;
  scan_grid.n_beta = 33;
  scan_grid.n_s = 33;
  std::vector<std::string> scan_ranges(4);
  auto* scan_cmd = app.add_subcommand("scan", "sign of the quadratic form on a rational grid");
  add_common(scan_cmd, scan_opts);
  add_class_input(scan_cmd, scan_in);
  scan_cmd->add_option("--beta-min", scan_ranges[0], "left edge (rational)");
  scan_cmd->add_option("--beta-max", scan_ranges[1], "right edge (rational)");
  scan_cmd->add_option("--s-min", scan_ranges[2], "lower s edge (rational, >= 0)");
  scan_cmd->add_option("--s-max", scan_ranges[3], "upper s edge (rational)");
  scan_cmd->add_option("--n-beta", scan_grid.n_beta, "grid columns");
  scan_cmd->add_option("--n-s", scan_grid.n_s, "grid rows");

  CommonOpts verify_opts;
  ClassInput verify_in;
  tw::SearchOptions search_opt;
  bool lb_flag = true;
  std::string e0_max_text, margin_text;
  auto* verify_cmd =
      app.add_subcommand("verify", "search for lattice walls matching the quadratic-form boundary");
  add_common(verify_cmd, verify_opts);
  add_class_input(verify_cmd, verify_in);
  auto* lb_opt = verify_cmd->add_flag("--line-bundle,!--no-line-bundle", lb_flag,
                                      "apply the rank bound e0 >= v.e0 (default: on for --divisor)");
  verify_cmd->add_option("--e0-max", e0_max_text, "absolute bound of the e0 search box (rational)");
  verify_cmd->add_option("--region-margin", margin_text, "witness safety margin in [0, 1)");
  verify_cmd->add_flag("--delta-filter", search_opt.delta_filter,
                       "additionally require nonnegative discriminants on candidate and quotient");

  CommonOpts plot_opts;
  ClassInput plot_in;
  tw::PlotSpec plot_spec;
  std::string plot_out;
  std::vector<std::string> plot_ranges(3);
  std::vector<std::string> plot_with_walls;
  bool no_boundary = false, no_shade = false, no_witness = false;
  auto* plot_cmd = app.add_subcommand("plot", "SVG picture of the (beta, alpha) half-plane");
  add_common(plot_cmd, plot_opts);
  add_class_input(plot_cmd, plot_in);
  plot_cmd->add_option("--out", plot_out, "output SVG path")->required();
  plot_cmd->add_option("--width", plot_spec.width, "canvas width in px");
  plot_cmd->add_option("--height", plot_spec.height, "canvas height in px");
  plot_cmd->add_option("--beta-min", plot_ranges[0], "left edge (rational)");
  plot_cmd->add_option("--beta-max", plot_ranges[1], "right edge (rational)");
  plot_cmd->add_option("--alpha-max", plot_ranges[2], "top edge (rational)");
  plot_cmd->add_option("--with-wall", plot_with_walls,
                       "draw the numerical wall against this class (repeatable)");
  plot_cmd->add_flag("--no-boundary", no_boundary, "omit the quadratic-form boundary");
  plot_cmd->add_flag("--no-shade", no_shade, "omit the shaded negative region");
  plot_cmd->add_flag("--no-witness", no_witness, "omit the witness marker");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*chern_cmd) return run_chern(chern_opts, chern_in);
    if (*qwall_cmd) return run_qwall(qwall_opts, qwall_in);
    if (*wall_cmd) return run_wall(wall_opts, wall_v, wall_w);
    if (*scan_cmd) return run_scan(scan_opts, scan_in, scan_grid, scan_ranges);
    if (*verify_cmd) {
      search_opt.line_bundle_bound = lb_opt->count() > 0 ? lb_flag : verify_in.from_divisor();
      return run_verify(verify_opts, verify_in, search_opt, e0_max_text, margin_text);
    }
    if (*plot_cmd)
      return run_plot(plot_opts, plot_in, plot_out, plot_spec, plot_ranges, plot_with_walls,
                      no_boundary, no_shade, no_witness);
  } catch (const CliError& e) {
    std::cerr << "tiltwall: " << e.message << "\n";
    return e.code;
  } catch (const tw::NonIntegralDivisor& e) {
    std::cerr << "tiltwall: " << e.what() << "\n";
    return kNonIntegral;
  } catch (const tw::PresetError& e) {
    std::cerr << "tiltwall: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "tiltwall: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
