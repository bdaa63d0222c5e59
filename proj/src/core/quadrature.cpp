#include "lsg/core/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "lsg/core/errors.hpp"

namespace lsg {

QuadratureRule gauss_legendre(int order, double a, double b) {
  if (order < 1) throw DomainError("quadrature order must be positive");
  QuadratureRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  for (int i = 0; i < (order + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton on P_order.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = (order == 1) ? 1.0 : order * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = mid - half * x;
    rule.nodes[order - 1 - i] = mid + half * x;
    rule.weights[i] = half * w;
    rule.weights[order - 1 - i] = half * w;
  }
  return rule;
}

int default_polar_order(int n) {
  if (n <= 3) return 64;
  if (n == 4) return 24;
  return 16;
}

namespace {

// Directions on S^{k} in R^{k+1} built recursively: x = (cos th, sin th * y), y on S^{k-1}.
void build(int dim, int polar, int azimuth, std::vector<SphereNode>& out) {
  if (dim == 2) {
    out.clear();
    out.reserve(azimuth);
    const double dphi = 2.0 * std::numbers::pi / azimuth;
    for (int j = 0; j < azimuth; ++j) {
      Vec d(2);
      d << std::cos(j * dphi), std::sin(j * dphi);
      out.push_back({d, dphi});
    }
    return;
  }
  std::vector<SphereNode> lower;
  build(dim - 1, polar, azimuth, lower);
  // Gauss-Legendre in th on [0, pi] with the Jacobian sin^{dim-2} th folded into the weight.
  const QuadratureRule gl = gauss_legendre(polar, 0.0, std::numbers::pi);
  out.clear();
  out.reserve(lower.size() * polar);
  for (int i = 0; i < polar; ++i) {
    const double th = gl.nodes[i];
    const double st = std::sin(th), ct = std::cos(th);
    const double w = gl.weights[i] * std::pow(st, dim - 2);
    for (const auto& node : lower) {
      Vec d(dim);
      d(0) = ct;
      d.tail(dim - 1) = st * node.direction;
      out.push_back({d, w * node.weight});
    }
  }
}

}  // namespace

std::vector<SphereNode> sphere_rule(int n, int polar_order, int azimuth_order) {
  if (n < 2 || n > kMaxDim) throw DomainError("sphere rule dimension out of range");
  if (polar_order < 1 || azimuth_order < 3) throw DomainError("sphere rule orders too small");
  std::vector<SphereNode> out;
  build(n, polar_order, azimuth_order, out);
  return out;
}

}  // namespace lsg
