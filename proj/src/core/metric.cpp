#include "lsg/core/metric.hpp"

#include <cmath>
#include <utility>

#include "lsg/core/errors.hpp"

namespace lsg {

namespace {

MetricSample zero_sample(int n) {
  MetricSample s;
  s.g = Mat::Identity(n, n);
  s.ginv = Mat::Identity(n, n);
  for (int k = 0; k < n; ++k) s.gamma[k] = Mat::Zero(n, n);
  s.ricci = Mat::Zero(n, n);
  return s;
}

void check_point(const Vec& x, int n) {
  if (x.size() != n) throw DomainError("point dimension does not match metric dimension");
}

}  // namespace

FlatMetric::FlatMetric(int n) : n_(n) {
  if (n < 2 || n > kMaxDim) throw DomainError("metric dimension out of range");
}

MetricSample FlatMetric::at(const Vec& x) const {
  check_point(x, n_);
  MetricSample s = zero_sample(n_);
  s.flat = true;
  return s;
}

ConformallyFlatRadialMetric::ConformallyFlatRadialMetric(int n, Vec center, RadialFunction w,
                                                         std::string name)
    : n_(n), center_(std::move(center)), w_(std::move(w)), name_(std::move(name)) {
  if (n < 3 || n > kMaxDim) throw DomainError("metric dimension out of range");
}

MetricSample ConformallyFlatRadialMetric::at(const Vec& x) const {
  check_point(x, n_);
  const Vec y = x - center_;
  const double rho = y.norm();
  if (!(rho > 0.0)) throw SingularPointError("conformal metric evaluated at its center");
  const Vec e = y / rho;
  const RadialValue w = w_(rho);

  const Vec dw = w.df * e;
  const Mat ee = e * e.transpose();
  const Mat ddw = w.d2f * ee + (w.df / rho) * (Mat::Identity(n_, n_) - ee);
  const double lap = w.d2f + (n_ - 1) * w.df / rho;
  const double dw2 = w.df * w.df;
  const double e2w = std::exp(2.0 * w.f);

  MetricSample s;
  s.g = e2w * Mat::Identity(n_, n_);
  s.ginv = (1.0 / e2w) * Mat::Identity(n_, n_);
  s.sqrt_det = std::exp(n_ * w.f);
  for (int k = 0; k < n_; ++k) {
    Mat gk = Mat::Zero(n_, n_);
    for (int i = 0; i < n_; ++i) {
      gk(k, i) += dw(i);
      gk(i, k) += dw(i);
      gk(i, i) -= dw(k);
    }
    s.gamma[k] = gk;
  }
  s.ricci = -(n_ - 2) * (ddw - dw * dw.transpose()) -
            (lap + (n_ - 2) * dw2) * Mat::Identity(n_, n_);
  s.scalar = (-2.0 * (n_ - 1) * lap - (n_ - 2.0) * (n_ - 1) * dw2) / e2w;
  return s;
}

RadialProfileMetric::RadialProfileMetric(int n, Vec center, RadialFunction f, std::string name)
    : n_(n), center_(std::move(center)), f_(std::move(f)), name_(std::move(name)) {
  if (n < 3 || n > kMaxDim) throw DomainError("metric dimension out of range");
}

MetricSample RadialProfileMetric::at(const Vec& x) const {
  check_point(x, n_);
  const Vec y = x - center_;
  const double r = y.norm();
  if (!(r > 0.0)) throw SingularPointError("profile metric evaluated at its center");
  const RadialValue fv = f_(r);
  if (!(fv.f > 0.0)) throw SingularPointError("profile metric evaluated where f <= 0");
  const double f = fv.f, df = fv.df;
  const double r2 = r * r;
  const double b = (1.0 / f - 1.0) / r2;
  const double db = (-df / (f * f)) / r2 - 2.0 * (1.0 / f - 1.0) / (r2 * r);
  const Mat id = Mat::Identity(n_, n_);

  MetricSample s;
  s.g = id + b * y * y.transpose();
  s.ginv = id + ((f - 1.0) / r2) * y * y.transpose();
  s.sqrt_det = 1.0 / std::sqrt(f);

  // dg[l](i, j) = d_l g_ij
  std::array<Mat, kMaxDim> dg;
  for (int l = 0; l < n_; ++l) {
    Mat d = (db * y(l) / r) * y * y.transpose();
    for (int i = 0; i < n_; ++i) {
      d(l, i) += b * y(i);
      d(i, l) += b * y(i);
    }
    dg[l] = d;
  }
  std::array<Mat, kMaxDim> lowered;
  for (int k = 0; k < n_; ++k) {
    Mat gk(n_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) gk(i, j) = 0.5 * (dg[i](k, j) + dg[j](k, i) - dg[k](i, j));
    lowered[k] = gk;
  }
  for (int k = 0; k < n_; ++k) {
    Mat gk = Mat::Zero(n_, n_);
    for (int l = 0; l < n_; ++l) gk += s.ginv(k, l) * lowered[l];
    s.gamma[k] = gk;
  }

  const double a_rad = -(n_ - 1) * df / (2.0 * r);
  const double b_tan = -df / (2.0 * r) + (n_ - 2) * (1.0 - f) / r2;
  const Vec nu_flat = (y / r) / std::sqrt(f);
  const Mat nn = nu_flat * nu_flat.transpose();
  s.ricci = a_rad * nn + b_tan * (s.g - nn);
  s.scalar = a_rad + (n_ - 1) * b_tan;
  return s;
}

}  // namespace lsg
