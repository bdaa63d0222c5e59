#pragma once

#include "lsg/core/config.hpp"

namespace lsg {

/// Closed-form quantities on the level set {u = t} of the Schwarzschild potential.
struct SchwarzschildLevel {
  double u;
  double grad_norm;
  double mean_curvature;
  double area;
  double scalar_curvature;
  double radius;
  /// 1 - u^2 = 2m r^{2-n}, exact.
  double one_minus_u2;
};

struct ConformalConstants {
  double phi_gradient_norm;
  double phi_p_value;
  double cross_section_area_g;
};

/// u = sqrt(1 - 2m r^{2-n}) on the exterior of the horizon r_h^{n-2} = 2m.
class SchwarzschildModel {
 public:
  SchwarzschildModel(int n, double m);
  explicit SchwarzschildModel(const StaticConfig& config);

  const StaticConfig& config() const { return config_; }
  int n() const { return config_.n(); }
  double m() const { return config_.m(); }
  double horizon_radius() const { return r_h_; }

  /// Areal radius of the level t in [0, 1).
  double radius_of_level(double t) const;
  /// Potential at areal radius r >= r_h.
  double potential(double r) const;

  SchwarzschildLevel level_quantities(double t) const;
  /// Same quantities parameterized by the conformal level s >= 0, exact near t = 1.
  SchwarzschildLevel level_quantities_s(double s) const;

  /// m^p (n-2)^p |S^{n-1}|, independent of t.
  double up_exact(double t, double p) const;
  ConformalConstants conformal_exact(double p) const;

 private:
  SchwarzschildLevel from_radius(double r, double one_minus_u2) const;

  StaticConfig config_;
  double r_h_;
};

}  // namespace lsg
