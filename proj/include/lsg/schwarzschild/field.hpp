#pragma once

#include <memory>

#include "lsg/core/field.hpp"
#include "lsg/schwarzschild/model.hpp"

namespace lsg {

/// Chart used to realize the Schwarzschild metric.
enum class SchwarzschildChart {
  /// g = psi^{4/(n-2)} delta, regular across the horizon.
  Isotropic,
  /// g = dr^2/(1 - 2m r^{2-n}) + r^2 g_S, singular at the horizon.
  Areal,
};

class SchwarzschildField final : public ScalarField {
 public:
  explicit SchwarzschildField(SchwarzschildModel model,
                              SchwarzschildChart chart = SchwarzschildChart::Isotropic);

  int dimension() const override { return model_.n(); }
  FieldSample evaluate(const Vec& x) const override;
  double value(const Vec& x) const override;
  const Metric& metric() const override { return *metric_; }
  double mass() const override { return model_.m(); }
  std::optional<Vec> symmetry_center() const override { return Vec::Zero(model_.n()); }
  std::optional<double> level_radius(double t) const override;
  std::optional<Box> level_bounds(double t) const override;
  bool is_known_static() const override { return true; }
  std::optional<double> one_minus_u2(const Vec& x) const override;
  std::string describe() const override;

  const SchwarzschildModel& model() const { return model_; }
  SchwarzschildChart chart() const { return chart_; }
  /// Chart radius of the horizon.
  double horizon_chart_radius() const;

 private:
  struct Radial {
    double u, du, d2u;
  };
  Radial radial(double rho) const;

  SchwarzschildModel model_;
  SchwarzschildChart chart_;
  std::unique_ptr<Metric> metric_;
};

}  // namespace lsg
