#include "lsg/schwarzschild/field.hpp"

#include <cmath>
#include <string>

#include "lsg/core/errors.hpp"

namespace lsg {

namespace {

// ConformallyFlatRadialMetric log-factor for psi^{4/(n-2)} delta, psi = 1 + (m/2) rho^{2-n}.
RadialFunction isotropic_log_factor(int n, double m) {
  return [n, m](double rho) {
    const double a = 0.5 * m * std::pow(rho, 2.0 - n);
    const double da = (2.0 - n) * a / rho;
    const double d2a = (2.0 - n) * (1.0 - n) * a / (rho * rho);
    const double psi = 1.0 + a;
    const double c = 2.0 / (n - 2);
    return RadialValue{c * std::log(psi), c * da / psi, c * (d2a / psi - da * da / (psi * psi))};
  };
}

RadialFunction areal_profile(int n, double m) {
  return [n, m](double r) {
    const double q = 2.0 * m * std::pow(r, 2.0 - n);
    return RadialValue{1.0 - q, (n - 2.0) * q / r, -(n - 2.0) * (n - 1.0) * q / (r * r)};
  };
}

}  // namespace

SchwarzschildField::SchwarzschildField(SchwarzschildModel model, SchwarzschildChart chart)
    : model_(std::move(model)), chart_(chart) {
  const int n = model_.n();
  if (n > kMaxDim) throw DomainError("dimension exceeds supported maximum");
  if (chart_ == SchwarzschildChart::Isotropic) {
    metric_ = std::make_unique<ConformallyFlatRadialMetric>(
        n, Vec::Zero(n), isotropic_log_factor(n, model_.m()), "schwarzschild-isotropic");
  } else {
    metric_ = std::make_unique<RadialProfileMetric>(n, Vec::Zero(n), areal_profile(n, model_.m()),
                                                    "schwarzschild-areal");
  }
}

double SchwarzschildField::horizon_chart_radius() const {
  const int n = model_.n();
  if (chart_ == SchwarzschildChart::Areal) return model_.horizon_radius();
  return std::pow(0.5 * model_.m(), 1.0 / (n - 2));
}

SchwarzschildField::Radial SchwarzschildField::radial(double rho) const {
  const int n = model_.n();
  const double m = model_.m();
  if (!(rho > 0.0)) throw SingularPointError("Schwarzschild field evaluated at the chart center");
  if (chart_ == SchwarzschildChart::Isotropic) {
    const double a = 0.5 * m * std::pow(rho, 2.0 - n);
    const double da = (2.0 - n) * a / rho;
    const double d2a = (2.0 - n) * (1.0 - n) * a / (rho * rho);
    const double b = 1.0 + a;
    return {(1.0 - a) / b, -2.0 * da / (b * b), -2.0 * d2a / (b * b) + 4.0 * da * da / (b * b * b)};
  }
  if (rho <= model_.horizon_radius()) {
    throw SingularPointError("areal chart evaluated at or inside the horizon");
  }
  const double q = 2.0 * m * std::pow(rho, 2.0 - n);
  const double f = 1.0 - q;
  const double df = (n - 2.0) * q / rho;
  const double d2f = -(n - 2.0) * (n - 1.0) * q / (rho * rho);
  const double u = std::sqrt(f);
  return {u, df / (2.0 * u), d2f / (2.0 * u) - df * df / (4.0 * u * u * u)};
}

double SchwarzschildField::value(const Vec& x) const {
  return radial(x.norm()).u;
}

FieldSample SchwarzschildField::evaluate(const Vec& x) const {
  const int n = model_.n();
  if (x.size() != n) throw DomainError("point dimension mismatch");
  const double rho = x.norm();
  const Radial r = radial(rho);
  const Vec e = x / rho;
  const Mat ee = e * e.transpose();
  FieldSample s;
  s.u = r.u;
  s.grad = r.du * e;
  s.hess = r.d2u * ee + (r.du / rho) * (Mat::Identity(n, n) - ee);
  return s;
}

std::optional<double> SchwarzschildField::one_minus_u2(const Vec& x) const {
  const int n = model_.n();
  const double rho = x.norm();
  if (chart_ == SchwarzschildChart::Isotropic) {
    const double a = 0.5 * model_.m() * std::pow(rho, 2.0 - n);
    return 4.0 * a / ((1.0 + a) * (1.0 + a));
  }
  return 2.0 * model_.m() * std::pow(rho, 2.0 - n);
}

std::optional<double> SchwarzschildField::level_radius(double t) const {
  const int n = model_.n();
  if (chart_ == SchwarzschildChart::Areal) return model_.radius_of_level(t);
  if (!(t > -1.0 && t < 1.0)) throw DomainError("level must lie in (-1, 1)");
  return std::pow(0.5 * model_.m() * (1.0 + t) / (1.0 - t), 1.0 / (n - 2));
}

std::optional<Box> SchwarzschildField::level_bounds(double t) const {
  const int n = model_.n();
  const double r = *level_radius(t);
  return Box{Vec::Constant(n, -r), Vec::Constant(n, r)};
}

std::string SchwarzschildField::describe() const {
  return "schwarzschild(n=" + std::to_string(model_.n()) + ", m=" + std::to_string(model_.m()) +
         (chart_ == SchwarzschildChart::Isotropic ? ", isotropic)" : ", areal)");
}

}  // namespace lsg
