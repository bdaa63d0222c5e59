#include "lsg/levelset/functionals.hpp"

#include <algorithm>
#include <cmath>

#include "lsg/core/errors.hpp"
#include "lsg/core/norms.hpp"

namespace lsg {

namespace {

void require_usable(const LevelSurface& surface) {
  if (surface.samples.empty()) throw DegenerateSurfaceError("level surface has no samples");
}

double up_prefactor(const LevelSurface& surface, const StaticConfig& config, double p) {
  return config.up_prefactor(surface.level, p);
}

}  // namespace

double w_p(const LevelSurface& surface, double p) {
  require_usable(surface);
  double acc = 0.0;
  for (const auto& s : surface.samples) acc += s.weight * std::pow(s.grad_norm, p);
  return acc;
}

double u_p(const LevelSurface& surface, const StaticConfig& config, double p) {
  if (!(p >= 0.0)) throw DomainError("U_p needs p >= 0");
  return up_prefactor(surface, config, p) * w_p(surface, p);
}

double u_p(const ScalarField& field, const StaticConfig& config, double t, double p,
           const ExtractOptions& options) {
  return u_p(extract(field, t, options), config, p);
}

double wp_derivative_formula(const LevelSurface& surface, double p) {
  require_usable(surface);
  double acc = 0.0;
  for (const auto& s : surface.samples)
    acc += s.weight * std::pow(s.grad_norm, p - 1.0) * s.mean_curvature;
  return -(p - 1.0) * acc;
}

double up_derivative_formula(const LevelSurface& surface, const StaticConfig& config, double p) {
  require_usable(surface);
  const bool regular = surface.excluded_area == 0.0;
  if (!(p >= 2.0) && !(regular && p >= 1.0)) {
    throw DomainError("derivative formula needs p >= 2 (or p >= 1 on a regular level set)");
  }
  const int n = config.n();
  const double c = 2.0 * (n - 1.0) / (n - 2.0);
  double acc = 0.0;
  for (const auto& s : surface.samples) {
    const double bracket = s.mean_curvature - c * s.u * s.grad_norm / s.one_minus_u2;
    acc += s.weight * std::pow(s.grad_norm, p - 1.0) * bracket;
  }
  return -(p - 1.0) * up_prefactor(surface, config, p) * acc;
}

double up_derivative_formula(const ScalarField& field, const StaticConfig& config, double t,
                             double p, const ExtractOptions& options) {
  return up_derivative_formula(extract(field, t, options), config, p);
}

double max_derivative_integrand(const LevelSurface& surface, double p) {
  double mx = 0.0;
  for (const auto& s : surface.samples)
    mx = std::max(mx, std::pow(s.grad_norm, p - 1.0) * std::abs(s.mean_curvature));
  return mx;
}

double phi_p(const LevelSurface& surface, const StaticConfig& config, double p) {
  require_usable(surface);
  const int n = config.n();
  const double e = (n - 1.0) / (n - 2.0);
  double acc = 0.0;
  for (const auto& s : surface.samples) {
    const double conformal_area = std::pow(s.one_minus_u2, e);
    const double grad_phi = 2.0 * s.grad_norm / conformal_area;
    acc += s.weight * conformal_area * std::pow(grad_phi, p);
  }
  return acc;
}

double k_factor(const ScalarField& field, double t, double p, const ExtractOptions& options) {
  const LevelSurface surface = extract(field, t, options);
  if (surface.degenerate) throw DegenerateSurfaceError("degenerate level set");
  return k_factor(surface, field.dimension(), p);
}

}  // namespace lsg
