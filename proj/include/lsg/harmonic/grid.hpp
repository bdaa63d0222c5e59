#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lsg/core/field.hpp"

namespace lsg {

/// Ball removed from the computational domain, carrying a Dirichlet value.
struct Excision {
  Vec center;
  double radius;
  double value;
};

/// Uniform Cartesian grid in three dimensions.
struct GridGeometry {
  std::array<std::size_t, 3> dims{};  // node counts per axis
  double spacing = 0.0;
  std::array<double, 3> origin{};

  std::size_t size() const { return dims[0] * dims[1] * dims[2]; }
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * dims[1] + j) * dims[2] + k;
  }
  Vec node(std::size_t i, std::size_t j, std::size_t k) const;
  /// Grid centered at the origin covering [-half_width, half_width]^3.
  static GridGeometry centered(double half_width, double spacing);
};

struct SolveReport {
  std::size_t iterations = 0;
  double residual = 0.0;
  double omega = 0.0;
  bool converged = false;
};

/// Nodal values of a potential on a grid; excised nodes hold NaN.
class GridField final : public ScalarField {
 public:
  GridField(GridGeometry geometry, std::vector<double> values, std::vector<Excision> excisions,
            double mass);

  int dimension() const override { return 3; }
  FieldSample evaluate(const Vec& x) const override;
  double value(const Vec& x) const override;
  FieldSample value_and_gradient(const Vec& x) const override;
  const Metric& metric() const override { return metric_; }
  double mass() const override { return mass_; }
  std::optional<Box> level_bounds(double t) const override;
  std::optional<Vec> star_origin() const override;
  double level_uncertainty() const override;
  std::string describe() const override;

  const GridGeometry& geometry() const { return geometry_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<Excision>& excisions() const { return excisions_; }
  bool active(std::size_t i, std::size_t j, std::size_t k) const;
  double node_value(std::size_t i, std::size_t j, std::size_t k) const {
    return values_[geometry_.index(i, j, k)];
  }

  SolveReport solve_report;

 private:
  double at(long i, long j, long k) const;
  /// NaN outside the grid or at excised nodes.
  double try_at(long i, long j, long k) const;
  FieldSample interpolate(const Vec& x, bool with_hessian) const;

  GridGeometry geometry_;
  std::vector<double> values_;
  std::vector<Excision> excisions_;
  double mass_;
  FlatMetric metric_;
};

/// Exterior Dirichlet problem on a grid: excised balls with given values and
/// outer data 1 - m |x - outer_center|^{2-n}.
struct DirichletSpec {
  GridGeometry geometry;
  std::vector<Excision> excisions;
  double mass = 1.0;
  Vec outer_center = Vec::Zero(3);
  double tolerance = 1e-10;
  std::size_t max_sweeps = 100000;
  double initial_value = 1.0;
};

/// Red-black SOR with Shortley-Weller stencils next to excisions.
GridField solve_dirichlet(const DirichletSpec& spec);

}  // namespace lsg
