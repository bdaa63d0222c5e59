#pragma once

#include <optional>

#include "lsg/core/config.hpp"
#include "lsg/schwarzschild/model.hpp"

namespace lsg::conformal {

/// Pointwise data of (g0, u) needed by the cylindrical ansatz
/// g = (1 - u^2)^{2/(n-2)} g0, phi = log((1+u)/(1-u)).
struct PointData {
  double u = 0.0;
  double grad_norm = 0.0;
  double hess_nn = 0.0;
  double hess_norm2 = 0.0;
  double hess_dudu = 0.0;
  /// 1 - u^2 when known without cancellation.
  std::optional<double> one_minus_u2;

  double omu2() const { return one_minus_u2 ? *one_minus_u2 : (1.0 - u) * (1.0 + u); }
};

double to_phi(double u);
double from_phi(double phi);

/// |grad phi|_g = 2|Du| / (1-u^2)^{(n-1)/(n-2)}.
double gradient_norm_g(const PointData& point, int n);
/// |Hess phi|^2_g for a harmonic u.
double hessian_norm_g(const PointData& point, int n);
/// H_g = (1-u^2)^{-1/(n-2)} [H - ((n-1)/(n-2)) 2u|Du|/(1-u^2)].
double mean_curvature_g(double H, const PointData& point, int n);
double mean_curvature_g(double H, double u, double grad_norm, int n);
/// Inverse: H = cosh(phi/2)^{-2/(n-2)} [H_g + ((n-1)/(n-2)) tanh(phi/2) |grad phi|_g].
double mean_curvature_from_g(double H_g, double phi, double grad_norm_g, int n);
/// R_g = (n-1)|grad phi|_g^2/(n-2).
double scalar_curvature_g(double grad_norm_g, int n);

/// U_p = (2m)^alpha / 2^p Phi_p with alpha = (p-1)(n-1)/(n-2).
double up_from_phi_p(double phi_p, double p, const StaticConfig& config);
double phi_p_from_up(double up, double p, const StaticConfig& config);
/// U_p'(t) = (2m)^alpha / (2^{p-1}(1-t^2)) Phi_p'(s).
double dup_from_dphi_p(double dphi_p, double t, double p, const StaticConfig& config);
double dphi_p_from_dup(double dup, double t, double p, const StaticConfig& config);
/// U_p''(t) = (2m)^alpha / (2^{p-2}(1-t^2)^2) (t Phi_p'(s) + Phi_p''(s)).
double d2up_from_phi_p(double dphi_p, double d2phi_p, double t, double p,
                       const StaticConfig& config);
/// Phi_p''(s) from U_p'(t), U_p''(t).
double d2phi_p_from_up(double dup, double d2up, double t, double p, const StaticConfig& config);

struct IdentityResidual {
  double lhs;
  double rhs;
  double residual;
};

/// Both sides of
///   int_{phi=s} |grad phi|^p / sinh s dsigma_g
///     = int_{phi>s} |grad phi|^{p-3} (coth phi |grad phi|^4 - (p-1) Hess phi(grad phi, grad phi)) / sinh phi dmu_g
/// on the Schwarzschild cylinder, the volume integral reduced by coarea and
/// mapped to (0, e^{-s}] by x = e^{-phi}.
IdentityResidual cylinder_identity_check(const SchwarzschildModel& model, double s, double p,
                                         int nodes = 128);

}  // namespace lsg::conformal
