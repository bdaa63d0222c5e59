#include <cmath>
#include <numbers>

#include "common.hpp"
#include "lsg/inequalities/inequalities.hpp"

namespace lsg {

using namespace detail;

namespace {

void require_boundary(const LevelSurface& surface, const char* what) {
  if (!boundary_level(surface.level))
    throw DomainError(std::string(what) + " needs the boundary level t = 0");
}

double scalar_integral(const LevelSurface& surface) {
  double acc = 0.0;
  for (const auto& s : surface.samples) acc += s.weight * s.scalar_curvature;
  return acc;
}

std::string connectivity_note(const LevelSurface& surface) {
  std::string note = provenance(surface);
  if (surface.components != 1) note += "; boundary not connected";
  return note;
}

}  // namespace

InequalityReport boundary_lp_bounds(const LevelSurface& surface, const StaticConfig& config,
                                    double p, const InequalityOptions& options) {
  require_samples(surface);
  require_boundary(surface, "boundary L^p bound");
  const int n = config.n();
  require_exponent(surface, n, p, options);
  const double grad = lp_norm(surface, [n](const SurfaceSample& s) { return 2.0 * s.grad_norm / (n - 2.0); }, p);
  const double curv = lp_norm(
      surface, [n](const SurfaceSample& s) { return s.scalar_curvature / ((n - 1.0) * (n - 2.0)); },
      std::isinf(p) ? p : 0.5 * p);
  const bool finite_p = !std::isinf(p);
  std::string note = provenance(surface);
  if (!finite_p) note += "; equality case not known to be rigid";
  return make_inequality(finite_p ? "boundary_lp_bound" : "boundary_linf_bound", grad,
                         std::sqrt(curv), params_for(surface, config, p), options.tolerances,
                         finite_p, note);
}

InequalityReport boundary_integral_inequality(const LevelSurface& surface,
                                              const StaticConfig& config, double p,
                                              const InequalityOptions& options) {
  require_samples(surface);
  require_boundary(surface, "boundary integral inequality");
  const int n = config.n();
  require_exponent(surface, n, p, options);
  double lhs = 0.0, rhs = 0.0;
  for (const auto& s : surface.samples) {
    lhs += s.weight * 4.0 * ((n - 1.0) / (n - 2.0)) * std::pow(s.grad_norm, p);
    rhs += s.weight * std::pow(s.grad_norm, p - 2.0) * s.scalar_curvature;
  }
  return make_inequality("boundary_integral_inequality", lhs, rhs, params_for(surface, config, p),
                         options.tolerances, true, provenance(surface));
}

namespace {

// Positive and negative parts of U_p''(0) up to sign.
std::pair<double, double> second_derivative_parts(const LevelSurface& surface,
                                                  const StaticConfig& config, double p) {
  const int n = config.n();
  const double c = 0.5 * (p - 1.0) * std::exp(config.up_exponent(p) * std::log(2.0 * config.m()));
  double grad_part = 0.0, curv_part = 0.0;
  for (const auto& s : surface.samples) {
    const double w = s.weight * std::pow(s.grad_norm, p - 2.0);
    curv_part += w * s.scalar_curvature;
    grad_part += w * 4.0 * ((n - 1.0) / (n - 2.0)) * s.grad_norm * s.grad_norm;
  }
  return {c * grad_part, c * curv_part};
}

}  // namespace

double boundary_second_derivative(const LevelSurface& surface, const StaticConfig& config, double p) {
  require_samples(surface);
  require_boundary(surface, "boundary second derivative");
  if (!(p >= 3.0)) throw DomainError("boundary second derivative needs p >= 3");
  const auto [grad_part, curv_part] = second_derivative_parts(surface, config, p);
  return grad_part - curv_part;
}

InequalityReport boundary_second_derivative_report(const LevelSurface& surface,
                                                   const StaticConfig& config, double p,
                                                   const InequalityOptions& options) {
  require_samples(surface);
  require_boundary(surface, "boundary second derivative");
  if (!(p >= 3.0)) throw DomainError("boundary second derivative needs p >= 3");
  const auto [grad_part, curv_part] = second_derivative_parts(surface, config, p);
  return make_inequality("boundary_second_derivative", grad_part, curv_part,
                         params_for(surface, config, p), options.tolerances, true,
                         provenance(surface) + "; slack = -U_p''(0)");
}

std::vector<InequalityReport> penrose_and_sufficient_conditions(const LevelSurface& surface,
                                                                const StaticConfig& config,
                                                                double p,
                                                                const InequalityOptions& options) {
  require_samples(surface);
  const int n = config.n();
  require_exponent(surface, n, p, options);
  const double t = surface.level;
  const double ratio = area_ratio(surface, n);
  const double k = k_factor(surface, n, p);
  const InequalityParams params = params_for(surface, config, p);
  const std::string base = provenance(surface);
  const char* implication = "; condition implies Schwarzschild";
  const bool finite_p = !std::isinf(p);
  std::vector<InequalityReport> out;

  if (interior_level(t)) {
    const double h_norm = averaged_lp_norm(
        surface, [n](const SurfaceSample& s) { return s.mean_curvature / (n - 1.0); }, p);
    const double bound = t * k * std::pow(ratio, -1.0 / (n - 1.0));
    auto r = make_inequality("interior_sufficient_condition", h_norm, bound, params,
                             options.tolerances, finite_p, base);
    if (r.satisfied) r.note += implication;
    out.push_back(std::move(r));
    return out;
  }
  if (!boundary_level(t)) throw DomainError("conditions need t in (0, 1) or t = 0");

  const double rs = (n - 1.0) * (n - 2.0);
  const double r_norm = averaged_lp_norm(
      surface, [rs](const SurfaceSample& s) { return s.scalar_curvature / rs; },
      finite_p ? 0.5 * p : p);
  auto sufficient = make_inequality("boundary_sufficient_condition", std::sqrt(r_norm),
                                    k * std::pow(ratio, -1.0 / (n - 1.0)), params,
                                    options.tolerances, finite_p, base);
  if (sufficient.satisfied) sufficient.note += implication;
  out.push_back(std::move(sufficient));

  const std::string note = connectivity_note(surface);
  const double lower = 0.5 * std::pow(ratio, (n - 2.0) / (n - 1.0));
  const double total_r = scalar_integral(surface);
  const double under = std::pow(ratio, -(n - 3.0) / (n - 1.0)) * total_r / (rs * unit_sphere_area(n));
  const double upper = lower * std::sqrt(std::max(under, 0.0));
  out.push_back(make_inequality("penrose_lower", lower, config.m(), params, options.tolerances,
                                true, note));
  out.push_back(make_inequality("penrose_upper", config.m(), upper, params, options.tolerances,
                                true, note));

  double pointwise = 0.0;
  for (const auto& s : surface.samples)
    pointwise = std::max(pointwise, std::sqrt(std::abs(s.scalar_curvature / rs)));
  auto inverse_radius = make_inequality("inverse_radius_condition", pointwise,
                                        std::pow(ratio, -1.0 / (n - 1.0)), params,
                                        options.tolerances, true, note);
  if (inverse_radius.satisfied) inverse_radius.note += implication;
  out.push_back(std::move(inverse_radius));
  return out;
}

double einstein_hilbert(const LevelSurface& surface) {
  if (surface.samples.empty()) throw DegenerateSurfaceError("empty surface");
  const int n = surface.dimension;
  return std::pow(surface.area(), -(n - 3.0) / (n - 1.0)) * scalar_integral(surface);
}

double einstein_hilbert_round_sphere(int n) {
  if (n < 3) throw DomainError("Einstein-Hilbert functional needs n >= 3");
  return (n - 1.0) * (n - 2.0) * std::pow(unit_sphere_area(n), 2.0 / (n - 1.0));
}

InequalityReport yamabe_comparison(const LevelSurface& surface, const StaticConfig& config,
                                   const InequalityOptions& options) {
  require_samples(surface);
  const int n = config.n();
  if (n < 4) throw DomainError("Yamabe comparison needs n >= 4");
  return make_inequality("yamabe_comparison", einstein_hilbert_round_sphere(n),
                         einstein_hilbert(surface), params_for(surface, config, 0.0),
                         options.tolerances, boundary_level(surface.level),
                         connectivity_note(surface) + "; Yamabe property of the metric not verified");
}

std::vector<InequalityReport> black_hole_uniqueness(const LevelSurface& surface,
                                                    const StaticConfig& config,
                                                    const InequalityOptions& options) {
  require_samples(surface);
  require_boundary(surface, "uniqueness chain");
  if (config.n() != 3) throw DomainError("uniqueness chain is three-dimensional");
  const InequalityParams params = params_for(surface, config, 0.0);
  const std::string note = connectivity_note(surface);
  const double ratio = area_ratio(surface, 3);
  const double total_r = scalar_integral(surface);
  const double lower = 0.5 * std::sqrt(ratio);
  const double upper = lower * std::sqrt(std::max(total_r / (2.0 * unit_sphere_area(3)), 0.0));
  std::vector<InequalityReport> out;
  out.push_back(make_inequality("gauss_bonnet_bound", total_r, 8.0 * std::numbers::pi, params,
                                options.tolerances, surface.components == 1, note));
  out.push_back(make_inequality("penrose_equality_chain", lower, upper, params, options.tolerances,
                                surface.components == 1, note));
  return out;
}

}  // namespace lsg
