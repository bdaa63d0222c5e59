#include "lsg/levelset/geometry.hpp"

#include <cmath>
#include <limits>

#include "lsg/core/errors.hpp"

namespace lsg {

double area_factor(const MetricSample& metric, const Vec& chart_normal) {
  if (metric.flat) return 1.0;
  return metric.sqrt_det * std::sqrt(chart_normal.dot(metric.ginv * chart_normal));
}

SurfaceSample sample_geometry(const ScalarField& field, const Vec& x, FieldSample* chart) {
  const int n = field.dimension();
  const FieldSample fs = field.evaluate(x);
  if (chart) *chart = fs;
  const MetricSample ms = field.metric().at(x);

  // Covariant Hessian D_i D_j u = d_ij u - Gamma^k_ij d_k u.
  Mat hc = fs.hess;
  if (!ms.flat) {
    for (int k = 0; k < n; ++k) hc -= fs.grad(k) * ms.gamma[k];
  }
  const Vec up = ms.ginv * fs.grad;  // Du as a vector
  const double g2 = fs.grad.dot(up);
  const double gn = std::sqrt(std::max(g2, 0.0));

  SurfaceSample s;
  s.point = x;
  s.u = fs.u;
  s.grad_norm = gn;
  const auto omu2 = field.one_minus_u2(x);
  s.one_minus_u2 = omu2 ? *omu2 : (1.0 - fs.u) * (1.0 + fs.u);

  const Mat a = ms.ginv * hc;  // mixed Hessian D^i D_j u
  s.laplacian = a.trace();
  s.hess_norm2 = (a * a).trace();
  s.hess_dudu = up.dot(hc * up);
  const Vec hdu = hc * up;  // covector D_i |Du|^2 / 2
  s.grad_grad_norm2 = gn > 0.0 ? hdu.dot(ms.ginv * hdu) / g2 : 0.0;

  if (!(gn > 0.0)) {
    s.normal = Vec::Zero(n);
    return s;
  }
  s.normal = up / gn;
  s.hess_nn = s.normal.dot(hc * s.normal);
  s.mean_curvature = (s.laplacian - s.hess_nn) / gn;

  // Tangential projection P^{ij} = g^{ij} - nu^i nu^j.
  const Mat p = ms.ginv - s.normal * s.normal.transpose();
  const Mat ph = p * hc;
  s.shape_norm2 = (ph * ph).trace() / g2;

  const double ric_nn = ms.flat ? 0.0 : s.normal.dot(ms.ricci * s.normal);
  s.scalar_curvature = ms.scalar - 2.0 * ric_nn + s.mean_curvature * s.mean_curvature - s.shape_norm2;
  return s;
}

double kato_defect(const FieldSample& sample) {
  const double g2 = sample.grad.squaredNorm();
  if (g2 == 0.0) return std::numeric_limits<double>::quiet_NaN();
  const double n = static_cast<double>(sample.grad.size());
  // D|Du| = D^2u Du / |Du|.
  const Vec d_norm = sample.hess * sample.grad;
  return sample.hess.squaredNorm() - (n / (n - 1.0)) * d_norm.squaredNorm() / g2;
}

}  // namespace lsg
