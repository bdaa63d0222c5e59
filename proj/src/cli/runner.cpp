#include "lsg/cli/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>

#include <Eigen/Core>
#include <boost/version.hpp>
#include <fmt/core.h>

#include "lsg/cli/output.hpp"
#include "lsg/core/errors.hpp"
#include "lsg/core/norms.hpp"
#include "lsg/core/quadrature.hpp"
#include "lsg/harmonic/critical.hpp"
#include "lsg/harmonic/multicenter.hpp"
#include "lsg/inequalities/inequalities.hpp"
#include "lsg/levelset/functionals.hpp"
#include "lsg/schwarzschild/field.hpp"

#ifndef LSG_VERSION
#define LSG_VERSION "unknown"
#endif

namespace lsg::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double monopole_error(const GridField& field, double m) {
  const auto& g = field.geometry();
  double err = 0.0;
  for (std::size_t i = 0; i < g.dims[0]; ++i)
    for (std::size_t j = 0; j < g.dims[1]; ++j)
      for (std::size_t k = 0; k < g.dims[2]; ++k) {
        if (!field.active(i, j, k)) continue;
        const double r = g.node(i, j, k).norm();
        err = std::max(err, std::abs(field.node_value(i, j, k) - (1.0 - m / r)));
      }
  return err;
}

GridField solve_monopole(double spacing, double half_width, double radius, double m, double tolerance) {
  DirichletSpec spec{GridGeometry::centered(half_width, spacing), {}, m, Vec::Zero(3)};
  spec.excisions.push_back({Vec::Zero(3), radius, 1.0 - m / radius});
  spec.tolerance = tolerance;
  return solve_dirichlet(spec);
}

bool admissible(double p, int n, const InequalityOptions& options, const LevelSurface& surface) {
  if (options.policy == ExponentPolicy::Standard) return p >= 3.0;
  return p >= 2.0 - 1.0 / (n - 1) && surface.excluded_area == 0.0;
}

void append(std::vector<InequalityReport>& out, std::vector<InequalityReport> more) {
  for (auto& r : more) out.push_back(std::move(r));
}

nlohmann::ordered_json versions() {
  nlohmann::ordered_json v;
  v["lsg"] = LSG_VERSION;
  v["eigen"] = fmt::format("{}.{}.{}", EIGEN_WORLD_VERSION, EIGEN_MAJOR_VERSION, EIGEN_MINOR_VERSION);
  v["boost"] = fmt::format("{}.{}.{}", BOOST_VERSION / 100000, BOOST_VERSION / 100 % 1000, BOOST_VERSION % 100);
  v["fmt"] = fmt::format("{}.{}.{}", FMT_VERSION / 10000, FMT_VERSION / 100 % 100, FMT_VERSION % 100);
  v["nlohmann_json"] = fmt::format("{}.{}.{}", NLOHMANN_JSON_VERSION_MAJOR, NLOHMANN_JSON_VERSION_MINOR,
                                   NLOHMANN_JSON_VERSION_PATCH);
#if defined(__clang__)
  v["compiler"] = std::string("clang ") + __clang_version__;
#elif defined(__GNUC__)
  v["compiler"] = std::string("gcc ") + __VERSION__;
#else
  v["compiler"] = "unknown";
#endif
  v["cxx_standard"] = static_cast<long>(__cplusplus);
  return v;
}

// U_p at the middle level with the configured quadrature and with half of it.
nlohmann::ordered_json self_convergence(const Problem& problem, const RunConfig& config) {
  const auto grid = config.t_grid();
  const double t = grid[grid.size() / 2];
  const double p = config.p_values.back();
  nlohmann::ordered_json j;
  j["t"] = t;
  j["p"] = p;
  const LevelSurface fine = extract(*problem.field, t, config.extract);
  j["backend"] = fine.backend;
  if (config.mode == RunMode::GridSolve) {
    j["note"] = "triangulation on the native solver grid; see solver.order";
    j["fine"] = u_p(fine, problem.config, p);
    return j;
  }
  ExtractOptions coarse_opts = config.extract;
  coarse_opts.backend = parse_backend(fine.backend);
  if (coarse_opts.backend == Backend::Triangulation) {
    coarse_opts.resolution = std::max(2, config.extract.resolution / 2);
    j["fine_resolution"] = config.extract.resolution;
    j["coarse_resolution"] = coarse_opts.resolution;
  } else {
    const int polar = config.extract.polar_order > 0 ? config.extract.polar_order
                                                     : default_polar_order(config.n);
    coarse_opts.polar_order = std::max(2, polar / 2);
    coarse_opts.azimuth_order = config.extract.azimuth_order > 0
                                    ? std::max(2, config.extract.azimuth_order / 2)
                                    : 0;
    j["fine_polar_order"] = polar;
    j["coarse_polar_order"] = coarse_opts.polar_order;
  }
  const double f = u_p(fine, problem.config, p);
  const double c = u_p(extract(*problem.field, t, coarse_opts), problem.config, p);
  j["fine"] = f;
  j["coarse"] = c;
  j["relative_change"] = std::abs(f - c) / std::abs(f);
  return j;
}

double relative_spread(const FunctionalTable& table, std::size_t column, double& mean) {
  mean = 0.0;
  for (const auto& row : table.rows) mean += row.up[column];
  mean /= static_cast<double>(table.rows.size());
  double spread = 0.0;
  for (const auto& row : table.rows) spread = std::max(spread, std::abs(row.up[column] - mean));
  return spread / std::abs(mean);
}

std::vector<Assertion> evaluate_assertions(const RunConfig& config, const Problem& problem,
                                           const RunResult& result) {
  const double tol = config.inequalities.tolerances.tol;
  const auto& table = result.table;
  const int n = config.n;
  std::vector<Assertion> out;
  for (const auto& name : config.checks.assertions) {
    Assertion a{name, true, ""};
    if (name == "finite") {
      a.passed = table.all_finite();
    } else if (name == "constant_up") {
      double worst = 0.0;
      for (std::size_t c = 0; c < table.p_values.size(); ++c) {
        double mean = 0.0;
        worst = std::max(worst, relative_spread(table, c, mean));
      }
      a.passed = worst <= tol;
      a.detail = fmt::format("max relative spread {:.3e}", worst);
    } else if (name == "up_limit" || name == "u1_mass") {
      double worst = 0.0;
      bool found = false;
      for (std::size_t c = 0; c < table.p_values.size(); ++c) {
        const double p = table.p_values[c];
        if (name == "u1_mass" && p != 1.0) continue;
        found = true;
        const double expected = std::pow(config.m * (n - 2.0), p) * unit_sphere_area(n);
        for (const auto& row : table.rows)
          worst = std::max(worst, std::abs(row.up[c] - expected) / expected);
      }
      a.passed = found && worst <= tol;
      a.detail = found ? fmt::format("max relative error {:.3e}", worst) : "no matching p column";
    } else if (name == "derivative_zero") {
      double worst = 0.0;
      for (const auto& row : table.rows)
        for (std::size_t c = 0; c < table.p_values.size(); ++c)
          if (!std::isnan(row.dup_formula[c]))
            worst = std::max(worst, std::abs(row.dup_formula[c]) / std::abs(row.up[c]));
      a.passed = worst <= tol;
      a.detail = fmt::format("max |U_p'|/U_p {:.3e}", worst);
    } else if (name == "derivative_consistency") {
      double worst = 0.0;
      for (const auto& row : table.rows)
        for (std::size_t c = 0; c < table.p_values.size(); ++c) {
          const double f = row.dup_formula[c], d = row.dup_fd[c];
          if (std::isnan(f) || std::isnan(d)) continue;
          const double scale = std::max({std::abs(f), std::abs(d), 1e-8 * std::abs(row.up[c])});
          worst = std::max(worst, std::abs(f - d) / scale);
        }
      a.passed = worst <= 1e-3;
      a.detail = fmt::format("max relative formula/fd gap {:.3e}", worst);
    } else if (name == "reports_satisfied") {
      std::size_t failed = 0;
      for (const auto& r : result.reports) failed += r.satisfied ? 0 : 1;
      a.passed = failed == 0 && !result.reports.empty();
      a.detail = fmt::format("{} of {} reports violated", failed, result.reports.size());
    } else if (name == "rigidity") {
      std::size_t failed = 0;
      for (const auto& r : result.reports) {
        const bool linf = r.name.find("linf") != std::string::npos;
        failed += (r.satisfied && r.rigidity != linf) ? 0 : 1;
      }
      a.passed = failed == 0 && !result.reports.empty();
      a.detail = fmt::format("{} of {} reports off the equality case", failed, result.reports.size());
    } else if (name == "convergence_order" || name == "max_principle") {
      if (!problem.solver) {
        a.passed = false;
        a.detail = "requires grid-solve mode";
      } else if (name == "convergence_order") {
        a.passed = problem.solver->order >= 1.8 && problem.solver->order <= 2.2;
        a.detail = fmt::format("measured order {:.4f}", problem.solver->order);
      } else {
        a.passed = problem.solver->max_principle;
      }
    } else {
      throw ConfigError("unknown assertion '" + name + "'");
    }
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

nlohmann::ordered_json SolverStudy::to_json() const {
  nlohmann::ordered_json j;
  j["spacing"] = spacing;
  j["iterations"] = report.iterations;
  j["residual"] = report.residual;
  j["omega"] = report.omega;
  j["converged"] = report.converged;
  j["max_error"] = max_error;
  if (std::isnan(order)) {
    j["order"] = nullptr;
  } else {
    j["coarse_spacing"] = coarse_spacing;
    j["coarse_error"] = coarse_error;
    j["order"] = order;
  }
  j["max_principle"] = max_principle;
  return j;
}

SolverStudy study_grid_solution(const GridField& field, double m, double excision_radius,
                                double half_width) {
  SolverStudy s;
  s.report = field.solve_report;
  s.spacing = field.geometry().spacing;
  s.max_error = monopole_error(field, m);
  s.order = std::numeric_limits<double>::quiet_NaN();
  // Boundary data: the excision value and 1 - m/r on the cube faces.
  const double inner = 1.0 - m / excision_radius;
  const double lo = std::min(inner, 1.0 - m / half_width);
  const double hi = std::max(inner, 1.0 - m / (std::sqrt(3.0) * half_width));
  const auto& g = field.geometry();
  bool ok = true;
  for (std::size_t i = 1; i + 1 < g.dims[0]; ++i)
    for (std::size_t j = 1; j + 1 < g.dims[1]; ++j)
      for (std::size_t k = 1; k + 1 < g.dims[2]; ++k) {
        if (!field.active(i, j, k)) continue;
        const double v = field.node_value(i, j, k);
        if (!(v > lo && v < hi)) ok = false;
      }
  s.max_principle = ok;
  return s;
}

Problem build_problem(const RunConfig& config) {
  config.validate();
  switch (config.mode) {
    case RunMode::Schwarzschild: {
      SchwarzschildModel model(config.n, config.m);
      return {std::make_shared<SchwarzschildField>(model), StaticConfig(config.n, config.m), {}, {}};
    }
    case RunMode::Monopole:
      return {std::make_shared<MultiCenterField>(MultiCenterField::monopole(config.n, config.m)),
              StaticConfig(config.n, config.m), {}, {}};
    case RunMode::Multicenter: {
      auto field = std::make_shared<MultiCenterField>(config.n, config.centers);
      Box box{config.centers.front().position, config.centers.front().position};
      for (const auto& c : config.centers) {
        box.lo = box.lo.cwiseMin(c.position);
        box.hi = box.hi.cwiseMax(c.position);
      }
      const double pad = std::max(1.0, (box.hi - box.lo).maxCoeff());
      box.lo.array() -= pad;
      box.hi.array() += pad;
      auto values = critical_values(*field, CriticalSearch{box});
      return {field, StaticConfig(config.n, field->mass()), std::move(values), {}};
    }
    case RunMode::GridSolve: {
      const auto& gs = config.grid_solve;
      auto field = std::make_shared<GridField>(
          solve_monopole(gs.spacing, gs.half_width, gs.excision_radius, config.m, gs.tolerance));
      SolverStudy study = study_grid_solution(*field, config.m, gs.excision_radius, gs.half_width);
      if (gs.measure_order) {
        const GridField coarse =
            solve_monopole(2.0 * gs.spacing, gs.half_width, gs.excision_radius, config.m, gs.tolerance);
        study.coarse_spacing = 2.0 * gs.spacing;
        study.coarse_error = monopole_error(coarse, config.m);
        study.order = std::log2(study.coarse_error / study.max_error);
      }
      const double u0 = 1.0 - config.m / gs.excision_radius;
      return {field, StaticConfig(3, config.m, u0), {}, study};
    }
  }
  throw ConfigError("unknown mode");
}

std::vector<InequalityReport> collect_reports(const LevelSurface& surface, const StaticConfig& config,
                                              std::span<const double> p_values,
                                              const InequalityOptions& options) {
  const int n = config.n();
  const double t = surface.level;
  std::vector<double> ps;
  for (double p : p_values)
    if (admissible(p, n, options, surface)) ps.push_back(p);
  std::vector<InequalityReport> out;
  if (std::abs(t) <= 1e-14) {
    out.push_back(overdetermined_residuals(surface, config, options).boundary);
    for (double p : ps) {
      out.push_back(boundary_lp_bounds(surface, config, p, options));
      out.push_back(boundary_integral_inequality(surface, config, p, options));
      if (p >= 3.0) out.push_back(boundary_second_derivative_report(surface, config, p, options));
      append(out, mass_sandwich(surface, config, p, options).reports);
      append(out, penrose_and_sufficient_conditions(surface, config, p, options));
    }
    out.push_back(boundary_lp_bounds(surface, config, kInf, options));
    if (n >= 4) {
      out.push_back(willmore(surface, config, WillmoreMode::Boundary, options));
      out.push_back(yamabe_comparison(surface, config, options));
    } else {
      append(out, black_hole_uniqueness(surface, config, options));
    }
    return out;
  }
  if (!(t > 0.0 && t < 1.0)) throw DomainError("reports need t = 0 or t in (0, 1)");
  out.push_back(overdetermined_residuals(surface, config, options).interior);
  for (double p : ps) {
    out.push_back(integral_inequality(surface, config, p, options));
    out.push_back(lp_bounds(surface, config, p, options));
    append(out, mass_sandwich(surface, config, p, options).reports);
    append(out, penrose_and_sufficient_conditions(surface, config, p, options));
  }
  out.push_back(lp_bounds(surface, config, kInf, options));
  if (surface.flat_background) out.push_back(willmore(surface, config, WillmoreMode::Flat, options));
  else if (n >= 4) out.push_back(willmore(surface, config, WillmoreMode::Static, options));
  return out;
}

InequalityReport rescale_rhs(InequalityReport report, double k) {
  if (k == 1.0) return report;
  report.rhs *= k;
  report.slack = report.rhs - report.lhs;
  const double scale = std::max(std::abs(report.lhs), std::abs(report.rhs));
  report.satisfied = report.slack >= -report.tolerances.tol * scale;
  report.rigidity = report.rigidity && report.satisfied &&
                    std::abs(report.slack) <= report.tolerances.rigidity_tol * scale;
  return report;
}

const std::vector<std::string>& assertion_names() {
  static const std::vector<std::string> names{
      "finite",   "constant_up",       "up_limit",  "u1_mass",           "derivative_zero",
      "derivative_consistency", "reports_satisfied", "rigidity", "convergence_order", "max_principle"};
  return names;
}

RunResult execute(const RunConfig& config) {
  RunResult result;
  const auto start = Clock::now();
  nlohmann::ordered_json timings;

  auto phase = Clock::now();
  const Problem problem = build_problem(config);
  timings["build"] = seconds_since(phase);

  auto& manifest = result.manifest;
  manifest["tool"] = "lsg";
  manifest["versions"] = versions();
  manifest["config"] = config.to_json();
  manifest["field"] = problem.field->describe();
  manifest["static_config"] = {{"n", problem.config.n()},
                               {"m", problem.config.m()},
                               {"u0", problem.config.u0()}};
  manifest["critical_values"] = problem.critical_values;
  manifest["solver"] = problem.solver ? problem.solver->to_json() : nlohmann::ordered_json();

  phase = Clock::now();
  SweepOptions sweep_opts;
  sweep_opts.extract = config.extract;
  sweep_opts.fd_step = config.fd_step;
  sweep_opts.critical_values = problem.critical_values;
  sweep_opts.threads = config.threads;
  const auto grid = config.t_grid();
  result.table = sweep(*problem.field, problem.config, grid, config.p_values, sweep_opts);
  timings["sweep"] = seconds_since(phase);

  std::vector<std::string> failures;
  for (const auto& row : result.table.rows)
    if (!row.ok) failures.push_back(fmt::format("row t={}: {}", row.t, row.error));
  if (!result.table.all_finite()) failures.push_back("non-finite value in the functional table");

  phase = Clock::now();
  std::vector<double> levels = config.report_levels;
  if (levels.empty()) {
    levels = {grid.front(), grid[grid.size() / 2], grid.back()};
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  }
  if (config.mode == RunMode::Schwarzschild && config.boundary_reports) levels.insert(levels.begin(), 0.0);
  for (double t : levels) {
    try {
      const LevelSurface surface = extract(*problem.field, t, config.extract);
      for (auto& r : collect_reports(surface, problem.config, config.p_values, config.inequalities))
        result.reports.push_back(rescale_rhs(std::move(r), config.checks.rhs_scale));
    } catch (const Error& e) {
      failures.push_back(fmt::format("reports at t={}: {}", t, e.what()));
    }
  }
  timings["reports"] = seconds_since(phase);

  phase = Clock::now();
  try {
    manifest["quadrature_self_convergence"] = self_convergence(problem, config);
  } catch (const Error& e) {
    failures.push_back(fmt::format("self-convergence: {}", e.what()));
  }
  timings["self_convergence"] = seconds_since(phase);

  result.assertions = evaluate_assertions(config, problem, result);
  auto assertions_json = nlohmann::ordered_json::array();
  for (const auto& a : result.assertions)
    assertions_json.push_back({{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
  manifest["assertions"] = assertions_json;

  if (!failures.empty()) {
    result.exit_code = kExitNumerical;
    result.failure = failures.front();
  } else if (std::any_of(result.assertions.begin(), result.assertions.end(),
                         [](const Assertion& a) { return !a.passed; })) {
    result.exit_code = kExitAssertion;
    result.failure = "assertion failed";
  }
  manifest["failures"] = failures;
  manifest["exit_code"] = result.exit_code;
  timings["total"] = seconds_since(start);
  result.timings = timings;
  return result;
}

int run(const RunConfig& config, std::ostream& log) {
  RunResult result;
  try {
    result = execute(config);
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    log << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  const auto written = write_artifacts(result, config);
  for (const auto& path : written) log << "wrote " << path.string() << '\n';
  for (const auto& a : result.assertions)
    log << fmt::format("[{}] {} {}\n", a.passed ? "PASS" : "FAIL", a.name, a.detail);
  for (const auto& f : result.manifest["failures"]) log << "failure: " << f.get<std::string>() << '\n';
  return result.exit_code;
}

}  // namespace lsg::cli
