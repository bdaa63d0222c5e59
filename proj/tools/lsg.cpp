// Command-line front end: run <config>, check <suite|config>, schwarzschild.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lsg/cli/checks.hpp"
#include "lsg/cli/run_config.hpp"
#include "lsg/cli/runner.hpp"
#include "lsg/core/errors.hpp"

namespace {

using namespace lsg::cli;

struct Overrides {
  std::string out_dir;
  std::string formats;
  double tol = 0.0;
  int resolution = 0;
};

void apply(const Overrides& o, RunConfig& config) {
  if (!o.out_dir.empty()) config.out_dir = o.out_dir;
  if (!o.formats.empty()) parse_formats(o.formats, config.write_csv, config.write_json);
  if (o.tol > 0.0) {
    config.inequalities.tolerances.tol = o.tol;
    config.inequalities.tolerances.rigidity_tol = std::min(config.inequalities.tolerances.rigidity_tol, o.tol);
  }
  if (o.resolution > 0) config.extract.resolution = o.resolution;
  config.validate();
}

// "min:max:count" with an optional ":tanh" suffix.
void parse_t_grid(const std::string& spec, RunConfig& config) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = spec.find(':', start);
    parts.push_back(spec.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (parts.size() != 3 && parts.size() != 4)
    throw lsg::ConfigError("--t-grid expects min:max:count[:tanh]");
  const auto nums = parse_number_list(parts[0] + "," + parts[1] + "," + parts[2]);
  config.t_min = nums[0];
  config.t_max = nums[1];
  config.t_count = static_cast<int>(nums[2]);
  if (nums[2] != config.t_count) throw lsg::ConfigError("--t-grid count must be an integer");
  if (parts.size() == 4) {
    if (parts[3] != "tanh" && parts[3] != "linear") throw lsg::ConfigError("--t-grid spacing must be tanh or linear");
    config.tanh_spacing = parts[3] == "tanh";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Level-set functionals and geometric inequalities for static potentials"};
  app.require_subcommand(1);
  Overrides overrides;
  app.add_option("--out-dir", overrides.out_dir, "Output directory (default $LSG_OUT_DIR or lsg-out)");
  app.add_option("--format", overrides.formats, "Comma-separated output formats: csv,json");
  app.add_option("--tol", overrides.tol, "Relative tolerance for satisfied inequalities");
  app.add_option("--resolution", overrides.resolution, "Triangulation cells per axis");

  std::string config_path;
  auto* run_cmd = app.add_subcommand("run", "Run a configuration and write tables, reports and a manifest");
  run_cmd->add_option("config", config_path, "Config file")->required();

  std::string target;
  auto* check_cmd = app.add_subcommand("check", "Run a predefined acceptance suite");
  check_cmd->add_option("target", target, "Suite name or config file naming a suite")->required();

  int n = 3;
  double m = 1.0;
  std::string p_list = "1,3";
  std::string t_grid = "0.05:0.95:19";
  auto* schw_cmd = app.add_subcommand("schwarzschild", "Sweep the Schwarzschild solution");
  schw_cmd->add_option("--n", n, "Dimension");
  schw_cmd->add_option("--m", m, "Mass");
  schw_cmd->add_option("--p", p_list, "Comma-separated exponents");
  schw_cmd->add_option("--t-grid", t_grid, "Levels as min:max:count[:tanh]");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      RunConfig config = load_config(config_path);
      apply(overrides, config);
      return run(config, std::cout);
    }
    if (schw_cmd->parsed()) {
      RunConfig config;
      config.out_dir = default_out_dir();
      config.mode = RunMode::Schwarzschild;
      config.n = n;
      config.m = m;
      config.p_values = parse_number_list(p_list);
      parse_t_grid(t_grid, config);
      apply(overrides, config);
      return run(config, std::cout);
    }
    SuiteOptions options;
    std::string suite = target;
    if (!is_suite(target)) {
      RunConfig config = load_config(target);
      apply(overrides, config);
      if (config.checks.suite.empty()) throw lsg::ConfigError("config does not name a [checks] suite");
      suite = config.checks.suite;
      options.rhs_scale = config.checks.rhs_scale;
      options.tolerances = config.inequalities.tolerances;
      options.threads = config.threads;
    } else if (overrides.tol > 0.0) {
      options.tolerances.tol = overrides.tol;
      options.tolerances.rigidity_tol = std::min(options.tolerances.rigidity_tol, overrides.tol);
    }
    return check(suite, options, std::cout);
  } catch (const lsg::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const lsg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}
