#include <cmath>

#include "common.hpp"
#include "lsg/inequalities/inequalities.hpp"

namespace lsg {

using namespace detail;

InequalityReport integral_inequality(const LevelSurface& surface, const StaticConfig& config,
                                     double p, const InequalityOptions& options) {
  require_samples(surface);
  const int n = config.n();
  require_exponent(surface, n, p, options);
  if (std::isinf(p)) throw DomainError("integral inequality needs a finite exponent");
  double lhs = 0.0, rhs = 0.0;
  for (const auto& s : surface.samples) {
    lhs += s.weight * (s.u / s.one_minus_u2) * 2.0 * std::pow(s.grad_norm, p) / (n - 2.0);
    rhs += s.weight * std::pow(s.grad_norm, p - 1.0) * s.mean_curvature / (n - 1.0);
  }
  return make_inequality("integral_inequality", lhs, rhs, params_for(surface, config, p),
                         options.tolerances, interior_level(surface.level), provenance(surface));
}

OverdeterminedResiduals overdetermined_residuals(const LevelSurface& surface,
                                                 const StaticConfig& config,
                                                 const InequalityOptions& options) {
  require_samples(surface);
  const int n = config.n();
  double r_in = 0.0, s_in = 0.0, r_bd = 0.0, s_bd = 0.0;
  for (const auto& s : surface.samples) {
    const double a = (s.u / s.one_minus_u2) * 2.0 * s.grad_norm / (n - 2.0);
    const double b = s.mean_curvature / (n - 1.0);
    r_in = std::max(r_in, std::abs(a - b));
    s_in = std::max({s_in, std::abs(a), std::abs(b)});
    const double c = std::pow(2.0 * s.grad_norm / (n - 2.0), 2);
    const double d = s.scalar_curvature / ((n - 1.0) * (n - 2.0));
    r_bd = std::max(r_bd, std::abs(c - d));
    s_bd = std::max({s_bd, std::abs(c), std::abs(d)});
  }
  const InequalityParams params = params_for(surface, config, 0.0);
  const std::string note = provenance(surface);
  return {make_identity("overdetermined_interior", r_in, s_in, params, options.tolerances,
                        interior_level(surface.level), note),
          make_identity("overdetermined_boundary", r_bd, s_bd, params, options.tolerances,
                        boundary_level(surface.level),
                        boundary_level(surface.level) ? note : note + "; not a boundary level")};
}

InequalityReport lp_bounds(const LevelSurface& surface, const StaticConfig& config, double p,
                           const InequalityOptions& options) {
  require_samples(surface);
  const int n = config.n();
  require_exponent(surface, n, p, options);
  const double t = surface.level;
  if (!(t >= 0.0 && t < 1.0)) throw DomainError("L^p bound needs t in [0, 1)");
  const double grad = lp_norm(surface, [n](const SurfaceSample& s) { return 2.0 * s.grad_norm / (n - 2.0); }, p);
  const double mean = lp_norm(surface, [n](const SurfaceSample& s) { return s.mean_curvature / (n - 1.0); }, p);
  const double lhs = (t / ((1.0 - t) * (1.0 + t))) * grad;
  const bool finite_p = !std::isinf(p);
  std::string note = provenance(surface);
  if (!finite_p) note += "; equality case not known to be rigid";
  return make_inequality(finite_p ? "lp_bound" : "linf_bound", lhs, mean,
                         params_for(surface, config, p), options.tolerances,
                         finite_p && interior_level(t), note);
}

MassSandwich mass_sandwich(const LevelSurface& surface, const StaticConfig& config, double p,
                           const InequalityOptions& options) {
  require_samples(surface);
  const int n = config.n();
  require_exponent(surface, n, p, options);
  const double t = surface.level;
  const double ratio = area_ratio(surface, n);
  const double k = k_factor(surface, n, p);
  MassSandwich out;
  out.m = config.m();
  bool rigid = true;
  if (boundary_level(t)) {
    const double r_norm = averaged_lp_norm(
        surface, [n](const SurfaceSample& s) { return s.scalar_curvature / ((n - 1.0) * (n - 2.0)); },
        0.5 * p);
    out.lower = 0.5 * k * std::pow(ratio, (n - 2.0) / (n - 1.0));
    out.upper = 0.5 * std::sqrt(r_norm) * ratio;
  } else if (interior_level(t)) {
    const double h_norm = averaged_lp_norm(
        surface, [n](const SurfaceSample& s) { return s.mean_curvature / (n - 1.0); }, p);
    const double w = (1.0 - t) * (1.0 + t);
    out.lower = 0.5 * w * k * std::pow(ratio, (n - 2.0) / (n - 1.0));
    out.upper = w / (2.0 * t) * h_norm * ratio;
  } else {
    throw DomainError("mass sandwich needs t in (0, 1) or the boundary level t = 0");
  }
  if (std::isinf(p)) rigid = false;
  const InequalityParams params = params_for(surface, config, p);
  const std::string note = provenance(surface);
  out.reports.push_back(make_inequality("mass_lower_bound", out.lower, out.m, params,
                                        options.tolerances, rigid, note));
  out.reports.push_back(make_inequality("mass_upper_bound", out.m, out.upper, params,
                                        options.tolerances, rigid, note));
  return out;
}

}  // namespace lsg
