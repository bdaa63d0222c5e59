#include "lsg/conformal/conformal.hpp"

#include <cmath>

#include "lsg/core/errors.hpp"

namespace lsg::conformal {

double to_phi(double u) {
  if (!(std::abs(u) < 1.0)) throw DomainError("to_phi needs |u| < 1");
  return std::log1p(u) - std::log1p(-u);
}

double from_phi(double phi) {
  if (std::isnan(phi)) throw DomainError("from_phi of NaN");
  return std::tanh(0.5 * phi);
}

namespace {

double check_omu2(const PointData& point) {
  const double w = point.omu2();
  if (!(w > 0.0)) throw DomainError("conformal data needs |u| < 1");
  return w;
}

}  // namespace

double gradient_norm_g(const PointData& point, int n) {
  const double w = check_omu2(point);
  return 2.0 * point.grad_norm * std::pow(w, -(n - 1.0) / (n - 2.0));
}

double hessian_norm_g(const PointData& point, int n) {
  const double w = check_omu2(point);
  const double u = point.u;
  const double g2 = point.grad_norm * point.grad_norm;
  const double nn = n, d = n - 2.0;
  return 4.0 * point.hess_norm2 * std::pow(w, -2.0 * nn / d) +
         (16.0 * nn / d) * u * point.hess_dudu * std::pow(w, -(3.0 * nn - 2.0) / d) +
         (16.0 * nn * (nn - 1.0) / (d * d)) * u * u * g2 * g2 * std::pow(w, -(4.0 * nn - 4.0) / d);
}

double mean_curvature_g(double H, const PointData& point, int n) {
  const double w = check_omu2(point);
  const double c = (n - 1.0) / (n - 2.0);
  return std::pow(w, -1.0 / (n - 2.0)) * (H - c * 2.0 * point.u * point.grad_norm / w);
}

double mean_curvature_g(double H, double u, double grad_norm, int n) {
  PointData p;
  p.u = u;
  p.grad_norm = grad_norm;
  return mean_curvature_g(H, p, n);
}

double mean_curvature_from_g(double H_g, double phi, double grad_norm_g, int n) {
  const double c = std::cosh(0.5 * phi);
  return std::pow(c, -2.0 / (n - 2.0)) *
         (H_g + ((n - 1.0) / (n - 2.0)) * std::tanh(0.5 * phi) * grad_norm_g);
}

double scalar_curvature_g(double grad_norm_g, int n) {
  if (n < 3) throw DomainError("scalar_curvature_g needs n >= 3");
  return (n - 1.0) * grad_norm_g * grad_norm_g / (n - 2.0);
}

namespace {

double base_factor(double p, const StaticConfig& config) {
  return std::exp(config.up_exponent(p) * std::log(2.0 * config.m()));
}

double one_minus_t2(double t) {
  if (!(t > -1.0 && t < 1.0)) throw DomainError("level must lie in (-1, 1)");
  return (1.0 - t) * (1.0 + t);
}

}  // namespace

double up_from_phi_p(double phi_p, double p, const StaticConfig& config) {
  return base_factor(p, config) / std::exp2(p) * phi_p;
}

double phi_p_from_up(double up, double p, const StaticConfig& config) {
  return up * std::exp2(p) / base_factor(p, config);
}

double dup_from_dphi_p(double dphi_p, double t, double p, const StaticConfig& config) {
  return base_factor(p, config) / (std::exp2(p - 1.0) * one_minus_t2(t)) * dphi_p;
}

double dphi_p_from_dup(double dup, double t, double p, const StaticConfig& config) {
  return dup * std::exp2(p - 1.0) * one_minus_t2(t) / base_factor(p, config);
}

double d2up_from_phi_p(double dphi_p, double d2phi_p, double t, double p,
                       const StaticConfig& config) {
  const double w = one_minus_t2(t);
  return base_factor(p, config) / (std::exp2(p - 2.0) * w * w) * (t * dphi_p + d2phi_p);
}

double d2phi_p_from_up(double dup, double d2up, double t, double p, const StaticConfig& config) {
  const double w = one_minus_t2(t);
  const double dphi = dphi_p_from_dup(dup, t, p, config);
  return d2up * std::exp2(p - 2.0) * w * w / base_factor(p, config) - t * dphi;
}

}  // namespace lsg::conformal
