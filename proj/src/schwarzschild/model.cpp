#include "lsg/schwarzschild/model.hpp"

#include <cmath>

#include "lsg/core/errors.hpp"
#include "lsg/core/norms.hpp"

namespace lsg {

namespace {

// x^e for x > 0 through exp/log.
double power(double x, double e) {
  if (!(x > 0.0)) throw DomainError("power of a non-positive base");
  return std::exp(e * std::log(x));
}

}  // namespace

SchwarzschildModel::SchwarzschildModel(int n, double m) : SchwarzschildModel(StaticConfig(n, m)) {}

SchwarzschildModel::SchwarzschildModel(const StaticConfig& config)
    : config_(config.n(), config.m(), 0.0),
      r_h_(power(2.0 * config.m(), 1.0 / (config.n() - 2))) {}

double SchwarzschildModel::radius_of_level(double t) const {
  if (!(t >= 0.0 && t < 1.0)) throw DomainError("Schwarzschild level must lie in [0, 1)");
  return power(2.0 * m() / ((1.0 - t) * (1.0 + t)), 1.0 / (n() - 2));
}

double SchwarzschildModel::potential(double r) const {
  if (!(r >= r_h_ * (1.0 - 1e-15))) throw DomainError("radius inside the horizon");
  const double f = 1.0 - 2.0 * m() * power(r, 2.0 - n());
  return std::sqrt(std::max(f, 0.0));
}

SchwarzschildLevel SchwarzschildModel::from_radius(double r, double one_minus_u2) const {
  const int n = this->n();
  SchwarzschildLevel q;
  q.radius = r;
  q.one_minus_u2 = one_minus_u2;
  q.u = std::sqrt(std::max(0.0, 1.0 - one_minus_u2));
  q.grad_norm = m() * (n - 2) * power(r, 1.0 - n);
  q.mean_curvature = (n - 1) * q.u / r;
  q.area = power(r, n - 1.0) * unit_sphere_area(n);
  q.scalar_curvature = (n - 1.0) * (n - 2.0) / (r * r);
  return q;
}

SchwarzschildLevel SchwarzschildModel::level_quantities(double t) const {
  const double r = radius_of_level(t);
  SchwarzschildLevel q = from_radius(r, (1.0 - t) * (1.0 + t));
  q.u = t;
  return q;
}

SchwarzschildLevel SchwarzschildModel::level_quantities_s(double s) const {
  if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("conformal level must be finite and >= 0");
  const double c = std::cosh(0.5 * s);
  const double omu2 = 1.0 / (c * c);
  const double r = power(2.0 * m() * c * c, 1.0 / (n() - 2));
  SchwarzschildLevel q = from_radius(r, omu2);
  q.u = std::tanh(0.5 * s);
  return q;
}

double SchwarzschildModel::up_exact(double t, double p) const {
  if (!(t >= 0.0 && t < 1.0)) throw DomainError("Schwarzschild level must lie in [0, 1)");
  if (!(p >= 0.0)) throw DomainError("exponent p must be nonnegative");
  return power(m() * (n() - 2), p) * unit_sphere_area(n());
}

ConformalConstants SchwarzschildModel::conformal_exact(double p) const {
  if (!(p >= 0.0)) throw DomainError("exponent p must be nonnegative");
  const int n = this->n();
  const double two_m = 2.0 * m();
  const double area_s = unit_sphere_area(n);
  ConformalConstants c;
  c.phi_gradient_norm = (n - 2) * power(two_m, -1.0 / (n - 2));
  c.cross_section_area_g = power(two_m, (n - 1.0) / (n - 2)) * area_s;
  c.phi_p_value = power(two_m, (n - 1.0 - p) / (n - 2)) * power(n - 2.0, p) * area_s;
  return c;
}

}  // namespace lsg
