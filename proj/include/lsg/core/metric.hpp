#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string>

#include "lsg/core/linalg.hpp"

namespace lsg {

/// Metric data at a chart point: components, inverse, volume density,
/// Christoffel symbols gamma[k](i, j) = Gamma^k_ij, Ricci tensor and scalar curvature.
struct MetricSample {
  Mat g;
  Mat ginv;
  double sqrt_det = 1.0;
  std::array<Mat, kMaxDim> gamma;
  Mat ricci;
  double scalar = 0.0;
  bool flat = false;
};

/// A function of the chart radius with its first two derivatives.
struct RadialValue {
  double f;
  double df;
  double d2f;
};
using RadialFunction = std::function<RadialValue(double)>;

class Metric {
 public:
  virtual ~Metric() = default;
  virtual int dimension() const = 0;
  virtual bool is_flat() const { return false; }
  virtual MetricSample at(const Vec& x) const = 0;
  virtual std::string describe() const = 0;
};

class FlatMetric final : public Metric {
 public:
  explicit FlatMetric(int n);
  int dimension() const override { return n_; }
  bool is_flat() const override { return true; }
  MetricSample at(const Vec& x) const override;
  std::string describe() const override { return "flat"; }

 private:
  int n_;
};

/// g = exp(2w(|x-c|)) delta.
class ConformallyFlatRadialMetric final : public Metric {
 public:
  ConformallyFlatRadialMetric(int n, Vec center, RadialFunction w, std::string name);
  int dimension() const override { return n_; }
  MetricSample at(const Vec& x) const override;
  std::string describe() const override { return name_; }

 private:
  int n_;
  Vec center_;
  RadialFunction w_;
  std::string name_;
};

/// g = dr^2/f(r) + r^2 g_{S^{n-1}} written in Cartesian chart coordinates around c.
class RadialProfileMetric final : public Metric {
 public:
  RadialProfileMetric(int n, Vec center, RadialFunction f, std::string name);
  int dimension() const override { return n_; }
  MetricSample at(const Vec& x) const override;
  std::string describe() const override { return name_; }

 private:
  int n_;
  Vec center_;
  RadialFunction f_;
  std::string name_;
};

}  // namespace lsg
