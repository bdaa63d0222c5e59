#include "lsg/core/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "lsg/core/errors.hpp"

namespace lsg {

double unit_sphere_area(int n) {
  if (n < 2) throw DomainError("unit sphere area needs n >= 2");
  // Gamma(n/2) from the half-integer closed forms.
  double gamma = 1.0;
  if (n % 2 == 0) {
    for (int k = 1; k < n / 2; ++k) gamma *= k;
  } else {
    gamma = std::sqrt(std::numbers::pi);
    for (int k = 1; 2 * k < n; ++k) gamma *= (2 * k - 1) / 2.0;
  }
  return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / gamma;
}

double averaged_lp_norm(std::span<const double> values, std::span<const double> weights,
                        double p) {
  if (!(p >= 1.0)) throw DomainError("averaged norm needs p >= 1");
  if (values.size() != weights.size()) throw DomainError("values and weights differ in size");
  if (values.empty()) throw DegenerateSurfaceError("averaged norm over an empty sample set");
  if (std::isinf(p)) {
    double mx = 0.0;
    for (double v : values) mx = std::max(mx, std::abs(v));
    return mx;
  }
  double total = 0.0, acc = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    total += weights[i];
    acc += weights[i] * std::pow(std::abs(values[i]), p);
  }
  if (!(total > 0.0)) throw DegenerateSurfaceError("averaged norm over zero total weight");
  return std::pow(acc / total, 1.0 / p);
}

namespace {

void collect(const LevelSurface& surface, const SurfaceFunction& f, std::vector<double>& v,
             std::vector<double>& w) {
  v.reserve(surface.samples.size());
  w.reserve(surface.samples.size());
  for (const auto& s : surface.samples) {
    v.push_back(f(s));
    w.push_back(s.weight);
  }
}

}  // namespace

double averaged_lp_norm(const LevelSurface& surface, const SurfaceFunction& f, double p) {
  std::vector<double> v, w;
  collect(surface, f, v, w);
  return averaged_lp_norm(v, w, p);
}

double lp_norm(const LevelSurface& surface, const SurfaceFunction& f, double p) {
  const double avg = averaged_lp_norm(surface, f, p);
  if (std::isinf(p)) return avg;
  return avg * std::pow(surface.area(), 1.0 / p);
}

double k_factor(std::span<const double> grad_norms, std::span<const double> weights, int n,
                double p) {
  if (!(p > 1.0)) throw DomainError("k factor needs p > 1");
  if (n < 3) throw DomainError("k factor needs n >= 3");
  const double l1 = averaged_lp_norm(grad_norms, weights, 1.0);
  const double lp = averaged_lp_norm(grad_norms, weights, p);
  if (!(lp > 0.0)) throw DegenerateSurfaceError("|Du| vanishes on the level set");
  const double shape = (n - 2.0) / (n - 1.0);
  if (std::isinf(p)) return std::pow(l1 / lp, shape);
  const bool positive = std::all_of(grad_norms.begin(), grad_norms.end(), [](double v) { return v > 0.0; });
  if (!positive) return std::pow(l1 / lp, p * shape / (p - 1.0));
  // log K = -shape (L(p) - p L(1)) / (p - 1) with L(q) = log mean exp(q z), z = log|Du|
  // centered; expm1/log1p keep the p -> 1 limit finite and exact on constant data.
  double total = 0.0, zbar = 0.0;
  for (std::size_t i = 0; i < grad_norms.size(); ++i) {
    total += weights[i];
    zbar += weights[i] * std::log(grad_norms[i]);
  }
  zbar /= total;
  auto cumulant = [&](double q) {
    double acc = 0.0;
    for (std::size_t i = 0; i < grad_norms.size(); ++i)
      acc += weights[i] * std::expm1(q * (std::log(grad_norms[i]) - zbar));
    return std::log1p(acc / total);
  };
  return std::exp(-shape * (cumulant(p) - p * cumulant(1.0)) / (p - 1.0));
}

double k_factor(const LevelSurface& surface, int n, double p) {
  std::vector<double> v, w;
  collect(surface, [](const SurfaceSample& s) { return s.grad_norm; }, v, w);
  return k_factor(v, w, n, p);
}

double coefficient_of_variation(const LevelSurface& surface, const SurfaceFunction& f) {
  double total = 0.0, mean = 0.0;
  for (const auto& s : surface.samples) {
    total += s.weight;
    mean += s.weight * f(s);
  }
  if (!(total > 0.0)) throw DegenerateSurfaceError("zero total weight");
  mean /= total;
  double var = 0.0;
  for (const auto& s : surface.samples) {
    const double d = f(s) - mean;
    var += s.weight * d * d;
  }
  var /= total;
  if (mean == 0.0) return var == 0.0 ? 0.0 : kInf;
  return std::sqrt(var) / std::abs(mean);
}

bool is_constant_over(const LevelSurface& surface, const SurfaceFunction& f, double tol) {
  return coefficient_of_variation(surface, f) <= tol;
}

double LevelSurface::area() const {
  double a = 0.0;
  for (const auto& s : samples) a += s.weight;
  return a;
}

double LevelSurface::max_grad_norm() const {
  double mx = 0.0;
  for (const auto& s : samples) mx = std::max(mx, s.grad_norm);
  return mx;
}

}  // namespace lsg
