#pragma once

#include <memory>
#include <optional>
#include <string>

#include "lsg/core/linalg.hpp"
#include "lsg/core/metric.hpp"

namespace lsg {

/// Value, chart gradient and chart Hessian of a potential.
struct FieldSample {
  double u;
  Vec grad;
  Mat hess;
};

/// A potential on a chart of R^n with its background metric.
class ScalarField {
 public:
  virtual ~ScalarField() = default;

  virtual int dimension() const = 0;
  virtual FieldSample evaluate(const Vec& x) const = 0;
  virtual double value(const Vec& x) const { return evaluate(x).u; }
  /// Value and gradient only; the Hessian may be left empty.
  virtual FieldSample value_and_gradient(const Vec& x) const { return evaluate(x); }
  virtual const Metric& metric() const = 0;

  /// Leading coefficient of 1 - u at infinity.
  virtual double mass() const = 0;

  /// Center of rotational symmetry, if any.
  virtual std::optional<Vec> symmetry_center() const { return std::nullopt; }
  /// Chart radius of the level set {u = t} when it is a coordinate sphere.
  virtual std::optional<double> level_radius(double /*t*/) const { return std::nullopt; }
  /// A chart box enclosing {u = t}.
  virtual std::optional<Box> level_bounds(double /*t*/) const { return std::nullopt; }
  /// Point from which every level set is star-shaped, if known.
  virtual std::optional<Vec> star_origin() const { return symmetry_center(); }
  /// Error in level value induced by the discretization of the field itself.
  virtual double level_uncertainty() const { return 0.0; }
  /// True for closed-form static vacuum solutions.
  virtual bool is_known_static() const { return false; }
  /// 1 - u^2 at x computed without cancellation, when the field can supply it.
  virtual std::optional<double> one_minus_u2(const Vec& /*x*/) const { return std::nullopt; }
  /// Optional cheap analytic Laplacian check; NaN when not known.
  virtual double flat_laplacian(const Vec& x) const;

  virtual std::string describe() const = 0;
};

using FieldPtr = std::shared_ptr<const ScalarField>;

}  // namespace lsg
