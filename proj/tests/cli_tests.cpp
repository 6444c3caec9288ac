#include <doctest.h>

#include <json.hpp>

#include "proc.hpp"

using nlohmann::json;

namespace {

std::string bin() { return proc::tiltwall_bin(); }

proc::Result run(const std::string& args) { return proc::run(bin() + " " + args + " 2>/dev/null"); }

json out_json(const proc::Result& r) { return json::parse(r.out); }

}  // namespace

TEST_CASE("chern subcommand") {
  auto r = run("chern --divisor L");
  CHECK(r.exit_code == 0);
  CHECK(proc::trimmed(r.out) == R"(["7","4","1","1/6"])");

  CHECK(proc::trimmed(run("chern --divisor E").out) == R"(["7","1","-1/2","1/6"])");
  CHECK(proc::trimmed(run("chern --divisor 2L-E").out) == R"(["7","7","7/2","7/6"])");
  CHECK(proc::trimmed(run("chern --divisor L --variety p3").out) == R"(["1","1","1/2","1/6"])");

  CHECK(run("chern --divisor Q").exit_code == 2);
  CHECK(run("chern").exit_code == 2);
  CHECK(run("chern --divisor 3/2L").exit_code == 3);
  CHECK(run("chern --divisor 1/3E").exit_code == 3);
  CHECK(run("chern --divisor E --variety p3").exit_code == 2);  // no E on a rank-1 basis
  CHECK(run("chern --divisor L --variety no-such-preset").exit_code == 2);
}

TEST_CASE("q-wall subcommand") {
  auto r = run("q-wall --divisor L");
  CHECK(r.exit_code == 0);
  CHECK(proc::trimmed(r.out) ==
        R"({"center":"1/4","radius_sq":"1/16","shape":"semicircle","x":"2","y":"-1","z":"0"})");

  // raw classes work without a preset lattice unless --strict asks for it
  CHECK(run("q-wall --v 8,4,1,1/6").exit_code == 0);
  CHECK(run("q-wall --v 8,4,1,1/6 --strict").exit_code == 5);
  CHECK(run("q-wall --v 7,4,1,1/6 --strict").exit_code == 0);
  CHECK(run("q-wall --v 7,4,1").exit_code == 2);
  CHECK(run("q-wall --divisor L --v 7,4,1,1/6").exit_code == 2);  // mutually exclusive
  CHECK(run("q-wall").exit_code == 2);

  // degenerate locus still reports its coefficients
  auto degenerate = run("q-wall --divisor L --variety p3");
  CHECK(degenerate.exit_code == 0);
  CHECK(out_json(degenerate).at("shape") == "empty");
}

TEST_CASE("wall subcommand") {
  auto r = run("wall --v 7,4,1,1/6 --w 7,4,0,0");
  CHECK(r.exit_code == 0);
  CHECK(proc::trimmed(r.out) == R"({"beta":"4/7","shape":"vertical","x":"0","y":"-7","z":"4"})");

  auto none = run("wall --v 7,4,1,1/6 --w 14,8,2,1/3");
  CHECK(none.exit_code == 0);
  CHECK(proc::trimmed(none.out) == "null");

  CHECK(run("wall --v 7,4,1,1/6").exit_code == 2);
  CHECK(run("wall --v 7,4,1,1/6 --w bogus").exit_code == 2);
  CHECK(run("wall --v 8,4,1,1/6 --w 7,4,0,0 --strict").exit_code == 5);
}

TEST_CASE("scan subcommand") {
  auto r = run("scan --divisor L --beta-min -1/4 --beta-max 3/4 --s-min 0 --s-max 1/8");
  CHECK(r.exit_code == 0);
  json j = out_json(r);
  CHECK(j.at("counts").at("negative") == 172);
  CHECK(j.at("counts").at("zero") == 9);
  CHECK(j.at("counts").at("positive") == 908);
  CHECK(j.at("grid").at("n_beta") == 33);
  CHECK(j.at("q_wall").at("shape") == "semicircle");

  // default window is derived from the boundary locus
  json d = out_json(run("scan --divisor L"));
  CHECK(d.at("grid").at("beta_min") == "-1/4");
  CHECK(d.at("grid").at("beta_max") == "3/4");
  CHECK(d.at("grid").at("s_max") == "1/8");

  // byte-identical across runs and worker counts
  auto a = run("scan --divisor L --n-beta 17 --n-s 11 --workers 1");
  auto b = run("scan --divisor L --n-beta 17 --n-s 11 --workers 3");
  auto c = run("scan --divisor L --n-beta 17 --n-s 11 --workers 3");
  CHECK(a.out == b.out);
  CHECK(b.out == c.out);

  CHECK(run("scan --divisor L --s-min -1/2").exit_code == 2);
  CHECK(run("scan --divisor L --n-beta 0").exit_code == 2);
  CHECK(run("scan --divisor L --beta-min 1/0").exit_code == 2);
}

TEST_CASE("verify subcommand exit codes carry the conclusion") {
  auto confirmed = run("verify --divisor L");
  CHECK(confirmed.exit_code == 0);
  json j = out_json(confirmed);
  CHECK(j.at("conclusion") == "CounterexampleConfirmed");
  CHECK(j.at("variety") == "blowup-p3");
  CHECK(j.at("divisor") == "L");
  CHECK(j.at("witness").at("s") == "1/64");
  CHECK(j.at("witness").at("beta") == "1/4");
  CHECK(j.at("witness").at("q_value") == "-3/32");
  CHECK(j.at("report_version") == 1);

  auto wall_found = run("verify --divisor E");
  CHECK(wall_found.exit_code == 1);
  CHECK(out_json(wall_found).at("conclusion") == "WallCandidateFound");

  auto inconclusive = run("verify --divisor L --variety p3");
  CHECK(inconclusive.exit_code == 4);
  CHECK(out_json(inconclusive).at("conclusion") == "Inconclusive");

  // raw classes default to the unrestricted box; the divisor form applies
  // the rank bound — both confirm here
  CHECK(run("verify --v 7,4,1,1/6").exit_code == 0);
  CHECK(run("verify --v 7,4,1,1/6 --line-bundle").exit_code == 0);
  CHECK(run("verify --v 8,4,1,1/6 --strict").exit_code == 5);

  CHECK(run("verify --divisor L --region-margin 1").exit_code == 2);
  CHECK(run("verify --divisor L --region-margin -1/2").exit_code == 2);
  auto margin = run("verify --divisor L --region-margin 1/2");
  CHECK(margin.exit_code == 0);
  CHECK(out_json(margin).at("witness").at("s") == "1/256");

  // a truncated box downgrades the conclusion
  CHECK(run("verify --divisor L --e0-max 3").exit_code == 4);
}

TEST_CASE("verify output is deterministic") {
  auto a = run("verify --divisor E --workers 1");
  auto b = run("verify --divisor E --workers 3");
  CHECK(a.out == b.out);
  auto c = run("verify --divisor E --workers 3");
  CHECK(b.out == c.out);
}

TEST_CASE("verify accepts indentation without changing content") {
  auto compact = run("verify --divisor L");
  auto pretty = run("verify --divisor L --json-indent 2");
  CHECK(pretty.exit_code == 0);
  CHECK(pretty.out.find('\n') != std::string::npos);
  CHECK(json::parse(compact.out) == json::parse(pretty.out));
}

TEST_CASE("presets load from files") {
  std::string preset = proc::env_or_fail("TILTWALL_PRESET_DIR") + "/blowup-p3.json";
  auto r = run("chern --divisor L --variety " + preset);
  CHECK(r.exit_code == 0);
  CHECK(proc::trimmed(r.out) == R"(["7","4","1","1/6"])");
  CHECK(out_json(run("verify --divisor L --variety " + preset)).at("conclusion") ==
        "CounterexampleConfirmed");
}

TEST_CASE("plot subcommand") {
  std::string out_path = "/tmp/tiltwall_cli_test_plot.svg";
  auto r = run("plot --divisor L --out " + out_path + " --with-wall 7,4,0,0");
  CHECK(r.exit_code == 0);
  json j = out_json(r);
  CHECK(j.at("out") == out_path);
  CHECK(j.at("elements").at("boundary") == true);
  CHECK(j.at("elements").at("witness") == true);
  CHECK(j.at("elements").at("walls") == 1);

  auto svg = proc::run("cat " + out_path);
  CHECK(svg.out.find("<svg") == 0);
  CHECK(svg.out.find("class=\"q-boundary\"") != std::string::npos);
  CHECK(svg.out.find("class=\"wall\"") != std::string::npos);
  proc::run("rm -f " + out_path);

  CHECK(run("plot --divisor L --out /nonexistent-dir/x.svg").exit_code == 6);
  CHECK(run("plot --out /tmp/tiltwall_axes.svg --with-wall 7,4,0,0").exit_code == 2);
  auto axes = run("plot --out /tmp/tiltwall_axes.svg");
  CHECK(axes.exit_code == 0);
  CHECK(out_json(axes).at("elements").at("boundary") == false);
  proc::run("rm -f /tmp/tiltwall_axes.svg");
}

TEST_CASE("top-level parsing") {
  CHECK(run("").exit_code == 2);           // a subcommand is required
  CHECK(run("no-such-command").exit_code == 2);
  CHECK(proc::run(bin() + " --help >/dev/null 2>&1").exit_code == 0);
  CHECK(proc::run(bin() + " verify --help >/dev/null 2>&1").exit_code == 0);
}
