#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "lsg/harmonic/multicenter.hpp"
#include "lsg/inequalities/report.hpp"
#include "lsg/levelset/extract.hpp"

namespace lsg::cli {

enum class RunMode { Schwarzschild, Monopole, Multicenter, GridSolve };

RunMode parse_mode(const std::string& name);
std::string mode_name(RunMode mode);

struct GridSolveConfig {
  double spacing = 1.0 / 32.0;
  double half_width = 2.0;
  double excision_radius = 1.0;
  double tolerance = 1e-10;
  /// Also solve at twice the spacing to measure the convergence order.
  bool measure_order = true;
};

struct CheckConfig {
  /// Named assertions evaluated after a run; see runner.hpp.
  std::vector<std::string> assertions;
  /// Predefined suite used by `check <config>`.
  std::string suite;
  /// Multiplies the right-hand side of every comparison (negative controls).
  double rhs_scale = 1.0;
};

struct RunConfig {
  RunMode mode = RunMode::Schwarzschild;
  int n = 3;
  double m = 1.0;
  std::vector<PointCharge> centers;
  std::vector<double> p_values{1.0, 3.0};
  unsigned threads = 0;

  double t_min = 0.05;
  double t_max = 0.95;
  int t_count = 19;
  bool tanh_spacing = false;

  ExtractOptions extract;
  double fd_step = 0.0;

  InequalityOptions inequalities;
  /// Levels at which reports are evaluated; empty selects first, middle and last grid levels.
  std::vector<double> report_levels;
  /// Also evaluate the boundary reports at t = 0 (Schwarzschild only).
  bool boundary_reports = true;

  std::filesystem::path out_dir;
  bool write_csv = true;
  bool write_json = true;

  GridSolveConfig grid_solve;
  CheckConfig checks;

  /// Throws ConfigError on inconsistent settings.
  void validate() const;
  std::vector<double> t_grid() const;
  /// Normalized echo of every setting, used in the manifest.
  nlohmann::ordered_json to_json() const;
};

/// Parses the sectioned key-value format; unknown sections or keys are errors.
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::filesystem::path& path);

/// Output directory from LSG_OUT_DIR, else "lsg-out".
std::filesystem::path default_out_dir();

/// Parses "a, b, c" into doubles; "inf" is accepted.
std::vector<double> parse_number_list(const std::string& text);
/// Parses "csv,json" into the two flags.
void parse_formats(const std::string& text, bool& csv, bool& json);

}  // namespace lsg::cli
