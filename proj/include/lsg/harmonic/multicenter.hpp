#pragma once

#include <vector>

#include "lsg/core/field.hpp"

namespace lsg {

struct PointCharge {
  Vec position;
  double weight;
};

/// u(x) = 1 - sum_i m_i |x - x_i|^{2-n} on flat R^n.
class MultiCenterField final : public ScalarField {
 public:
  MultiCenterField(int n, std::vector<PointCharge> centers);

  static MultiCenterField monopole(int n, double m);
  /// Two equal charges m/2 at (+-separation/2, 0, ...), total mass m.
  static MultiCenterField two_center(int n, double separation, double m);

  int dimension() const override { return n_; }
  FieldSample evaluate(const Vec& x) const override;
  double value(const Vec& x) const override;
  const Metric& metric() const override { return metric_; }
  double mass() const override;
  std::optional<Vec> symmetry_center() const override;
  std::optional<double> level_radius(double t) const override;
  std::optional<Box> level_bounds(double t) const override;
  std::optional<Vec> star_origin() const override;
  double flat_laplacian(const Vec& x) const override;
  std::string describe() const override;

  const std::vector<PointCharge>& centers() const { return centers_; }
  /// Minimum distance from x to any center.
  double distance_to_centers(const Vec& x) const;

 private:
  int n_;
  std::vector<PointCharge> centers_;
  FlatMetric metric_;
};

}  // namespace lsg
