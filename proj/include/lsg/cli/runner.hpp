#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "lsg/cli/run_config.hpp"
#include "lsg/core/config.hpp"
#include "lsg/core/field.hpp"
#include "lsg/harmonic/grid.hpp"
#include "lsg/inequalities/report.hpp"
#include "lsg/levelset/sweep.hpp"

namespace lsg::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitNumerical = 3,
  kExitAssertion = 4,
};

/// Error of a grid solution against the analytic monopole at two spacings.
struct SolverStudy {
  SolveReport report;
  double spacing = 0.0;
  double max_error = 0.0;
  double coarse_spacing = 0.0;
  double coarse_error = 0.0;
  /// log2(coarse_error / max_error) for a 2:1 refinement; NaN when not measured.
  double order = 0.0;
  /// Every active interior node lies strictly between the boundary extrema.
  bool max_principle = false;

  nlohmann::ordered_json to_json() const;
};

/// Field, static data and critical values for a configured run.
struct Problem {
  FieldPtr field;
  StaticConfig config;
  std::vector<double> critical_values;
  /// Present in grid-solve mode.
  std::optional<SolverStudy> solver;
};

Problem build_problem(const RunConfig& config);

/// Max error against 1 - m/|x| over active nodes and the discrete maximum principle.
SolverStudy study_grid_solution(const GridField& field, double m, double excision_radius,
                                double half_width);

/// Every report applicable to `surface`: interior reports for t in (0,1) and
/// boundary reports at t = 0. Exponents outside the policy range are skipped.
std::vector<InequalityReport> collect_reports(const LevelSurface& surface, const StaticConfig& config,
                                              std::span<const double> p_values,
                                              const InequalityOptions& options);

/// Multiplies the right-hand side by k and re-judges; rigidity can only be lost.
InequalityReport rescale_rhs(InequalityReport report, double k);

struct Assertion {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct RunResult {
  FunctionalTable table;
  std::vector<InequalityReport> reports;
  std::vector<Assertion> assertions;
  nlohmann::ordered_json manifest;
  nlohmann::ordered_json timings;
  int exit_code = kExitOk;
  std::string failure;
};

/// Runs a configuration without touching the filesystem.
RunResult execute(const RunConfig& config);

/// Names accepted by [checks] assert.
const std::vector<std::string>& assertion_names();

/// execute + write_artifacts; progress and failures go to `log`.
int run(const RunConfig& config, std::ostream& log);

}  // namespace lsg::cli
