#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <numbers>
#include <sstream>

#include "lsg/cli/checks.hpp"
#include "lsg/cli/output.hpp"
#include "lsg/cli/run_config.hpp"
#include "lsg/cli/runner.hpp"
#include "lsg/core/errors.hpp"

using namespace lsg;
using namespace lsg::cli;
using doctest::Approx;
namespace fs = std::filesystem;

namespace {

RunConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path scratch_dir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("lsg-test-cli-" + name);
  fs::remove_all(d);
  return d;
}

const char* kSmallRun = R"(
[run]
mode = schwarzschild
n = 3
m = 1
p = 1, 3
threads = 2

[grid]
t_min = 0.1
t_max = 0.9
t_count = 5

[checks]
assert = finite, constant_up, up_limit, derivative_zero, reports_satisfied, rigidity
)";

}  // namespace

TEST_CASE("configuration parsing") {
  const RunConfig c = parse(R"(
; comment
[run]
mode = multicenter
n = 3
centers = 0.5 0 0 0.1; -0.5 0 0 0.1
p = 3, 4.5
[grid]
t_min = 0.65
t_max = 0.9
t_count = 6
spacing = tanh
[levelset]
backend = star
polar_order = 24
[inequalities]
policy = refined
levels = 0.7, 0.8
)");
  CHECK(c.mode == RunMode::Multicenter);
  REQUIRE(c.centers.size() == 2);
  CHECK(c.centers[1].position(0) == Approx(-0.5));
  CHECK(c.centers[1].weight == Approx(0.1));
  REQUIRE(c.p_values.size() == 2);
  CHECK(c.p_values[1] == 4.5);
  CHECK(c.tanh_spacing);
  CHECK(c.extract.backend == Backend::Star);
  CHECK(c.inequalities.policy == ExponentPolicy::Refined);
  CHECK(c.report_levels == std::vector<double>{0.7, 0.8});
  const auto grid = c.t_grid();
  CHECK(grid.size() == 6);
  CHECK(grid.front() == 0.65);
  CHECK(grid.back() == 0.9);
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(parse("[run]\nbogus = 1\n"), ConfigError);
  // L^inf reports are always emitted; inf is not a sweep exponent.
  CHECK_THROWS_AS(parse("[run]\np = 3, inf\n"), ConfigError);
  CHECK_THROWS_AS(parse("[nowhere]\nn = 3\n"), ConfigError);
  CHECK_THROWS_AS(parse("[run]\nn = three\n"), ConfigError);
  CHECK_THROWS_AS(parse("[run]\nmode = kerr\n"), ConfigError);
  CHECK_THROWS_AS(parse("[run]\nn = 2\n"), ConfigError);
  CHECK_THROWS_AS(parse("[grid]\nt_min = 0.9\nt_max = 0.1\n"), ConfigError);
  CHECK_THROWS_AS(parse("[inequalities]\ntol = 1e-9\nrigidity_tol = 1e-6\n"), ConfigError);
  CHECK_THROWS_AS(parse("[run]\nmode = multicenter\n"), ConfigError);
  CHECK_THROWS_AS(parse("[run]\nmode = grid-solve\nn = 4\n"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/lsg.ini"), ConfigError);
}

TEST_CASE("helpers") {
  CHECK(parse_number_list("1, 2.5 ,inf") == std::vector<double>{1.0, 2.5, std::numeric_limits<double>::infinity()});
  bool csv = false, json = false;
  parse_formats("json", csv, json);
  CHECK_FALSE(csv);
  CHECK(json);
  CHECK_THROWS_AS(parse_formats("xml", csv, json), ConfigError);
  for (RunMode m : {RunMode::Schwarzschild, RunMode::Monopole, RunMode::Multicenter, RunMode::GridSolve})
    CHECK(parse_mode(mode_name(m)) == m);
}

TEST_CASE("output directory from the environment") {
  ::setenv("LSG_OUT_DIR", "/tmp/lsg-env-out", 1);
  CHECK(default_out_dir() == fs::path("/tmp/lsg-env-out"));
  ::unsetenv("LSG_OUT_DIR");
  CHECK(default_out_dir() == fs::path("lsg-out"));
}

TEST_CASE("Schwarzschild run passes its assertions") {
  const RunConfig c = parse(kSmallRun);
  const RunResult r = execute(c);
  CHECK(r.exit_code == kExitOk);
  CHECK(r.failure.empty());
  REQUIRE(r.table.rows.size() == 5);
  for (const auto& row : r.table.rows) CHECK(row.up[1] == Approx(4.0 * std::numbers::pi).epsilon(1e-10));
  CHECK(r.assertions.size() == c.checks.assertions.size());
  for (const auto& a : r.assertions) {
    CAPTURE(a.name);
    CHECK(a.passed);
  }
  CHECK_FALSE(r.reports.empty());
  CHECK(r.manifest["tool"] == "lsg");
  CHECK(r.manifest["exit_code"] == 0);
  CHECK(r.manifest.contains("versions"));
}

TEST_CASE("runs are deterministic and artifacts use LF line endings") {
  RunConfig c = parse(kSmallRun);
  c.out_dir = scratch_dir("a");
  const RunResult a = execute(c);
  write_artifacts(a, c);
  RunConfig d = c;
  d.out_dir = scratch_dir("b");
  d.threads = 1;
  write_artifacts(execute(d), d);
  for (const char* f : {"table.csv", "table.json", "reports.json", "reports.txt", "manifest.json"}) {
    CAPTURE(f);
    const std::string x = slurp(c.out_dir / f);
    CHECK_FALSE(x.empty());
    CHECK(x == slurp(d.out_dir / f));
    CHECK(x.find('\r') == std::string::npos);
    CHECK(x.back() == '\n');
  }
  CHECK(fs::exists(c.out_dir / "timings.json"));
  fs::remove_all(c.out_dir);
  fs::remove_all(d.out_dir);
}

TEST_CASE("assertion failure maps to its exit code") {
  RunConfig c = parse(kSmallRun);
  c.checks.rhs_scale = 1.01;
  const RunResult r = execute(c);
  CHECK(r.exit_code == kExitAssertion);
  bool rigidity_failed = false;
  for (const auto& a : r.assertions)
    if (a.name == "rigidity") rigidity_failed = !a.passed;
  CHECK(rigidity_failed);
}

TEST_CASE("rescale_rhs only removes rigidity") {
  InequalityReport r = make_inequality("x", 1.0, 1.0, {}, Tolerances{}, true, "");
  REQUIRE(r.rigidity);
  const InequalityReport up = rescale_rhs(r, 1.01);
  CHECK(up.satisfied);
  CHECK_FALSE(up.rigidity);
  const InequalityReport down = rescale_rhs(r, 0.99);
  CHECK_FALSE(down.satisfied);
  InequalityReport plain = make_inequality("x", 1.0, 1.0, {}, Tolerances{}, false, "");
  CHECK_FALSE(rescale_rhs(plain, 1.0).rigidity);
}

TEST_CASE("check suites") {
  CHECK(is_suite("all"));
  CHECK(is_suite("kato"));
  CHECK_FALSE(is_suite("nope"));
  std::ostringstream out;
  CHECK(check("conformal", SuiteOptions{}, out) == kExitOk);
  CHECK(out.str().find("PASS") != std::string::npos);

  SuiteOptions negative;
  negative.rhs_scale = 1.01;
  std::ostringstream neg;
  CHECK(check("schwarzschild-rigidity", negative, neg) == kExitAssertion);
  CHECK(neg.str().find("FAIL") != std::string::npos);
}

TEST_CASE("collect_reports chooses interior or boundary reports") {
  const Problem p = build_problem(parse(kSmallRun));
  const std::vector<double> ps = {3.0};
  const auto interior = collect_reports(extract(*p.field, 0.5), p.config, ps, {});
  const auto boundary = collect_reports(extract(*p.field, 0.0), p.config, ps, {});
  auto has = [](const std::vector<InequalityReport>& rs, const std::string& n) {
    for (const auto& r : rs)
      if (r.name == n) return true;
    return false;
  };
  CHECK(has(interior, "integral_inequality"));
  CHECK_FALSE(has(interior, "boundary_lp_bound"));
  CHECK(has(boundary, "boundary_lp_bound"));
  CHECK_FALSE(has(boundary, "integral_inequality"));
  for (const auto& r : interior) {
    CAPTURE(r.name);
    CHECK(r.satisfied);
  }
  for (const auto& r : boundary) {
    CAPTURE(r.name);
    CHECK(r.satisfied);
  }
}
