#include <cmath>

#include "lsg/conformal/conformal.hpp"
#include "lsg/core/errors.hpp"
#include "lsg/core/quadrature.hpp"

namespace lsg::conformal {

namespace {

struct CylinderLevel {
  double grad_phi;
  double area_g;
  double mean_curvature_g;
};

CylinderLevel level_data(const SchwarzschildModel& model, double phi) {
  const int n = model.n();
  const SchwarzschildLevel q = model.level_quantities_s(phi);
  PointData pd;
  pd.u = q.u;
  pd.grad_norm = q.grad_norm;
  pd.one_minus_u2 = q.one_minus_u2;
  const double conformal_area = std::pow(q.one_minus_u2, (n - 1.0) / (n - 2.0));
  return {gradient_norm_g(pd, n), q.area * conformal_area,
          mean_curvature_g(q.mean_curvature, pd, n)};
}

// Volume side over (0, e^{-s}] in x = e^{-phi}; Hess phi(grad, grad) = -H_g |grad phi|^3
// because phi is g-harmonic.
double volume_side(const SchwarzschildModel& model, double s, double p, int nodes) {
  const QuadratureRule rule = gauss_legendre(nodes, 0.0, std::exp(-s));
  double acc = 0.0;
  for (int i = 0; i < nodes; ++i) {
    const double x = rule.nodes[i];
    const double phi = -std::log(x);
    const CylinderLevel lv = level_data(model, phi);
    const double x2 = x * x;
    // coth(phi)/(x sinh(phi)) and 1/(x sinh(phi)) without cancellation.
    const double coth_over = 2.0 * (1.0 + x2) / ((1.0 - x2) * (1.0 - x2));
    const double inv_over = 2.0 / (1.0 - x2);
    const double g = lv.grad_phi;
    const double integrand = std::pow(g, p - 4.0) *
                             (coth_over * g * g * g * g + inv_over * (p - 1.0) * lv.mean_curvature_g * g * g * g) *
                             lv.area_g;
    acc += rule.weights[i] * integrand;
  }
  return acc;
}

}  // namespace

IdentityResidual cylinder_identity_check(const SchwarzschildModel& model, double s, double p,
                                         int nodes) {
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("cylinder identity needs s > 0");
  if (!(p >= 1.0)) throw DomainError("cylinder identity needs p >= 1");
  if (nodes < 8) throw DomainError("cylinder identity needs at least 8 nodes");
  const CylinderLevel lv = level_data(model, s);
  IdentityResidual r;
  r.lhs = std::pow(lv.grad_phi, p) * lv.area_g / std::sinh(s);
  r.rhs = volume_side(model, s, p, nodes);
  const double coarse = volume_side(model, s, p, nodes / 2);
  if (std::abs(coarse - r.rhs) > 1e-6 * std::abs(r.rhs)) {
    throw NumericalError("semi-infinite quadrature did not converge");
  }
  r.residual = std::abs(r.lhs - r.rhs) / std::abs(r.lhs);
  return r;
}

}  // namespace lsg::conformal
