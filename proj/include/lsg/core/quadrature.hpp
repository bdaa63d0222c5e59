#pragma once

#include <vector>

#include "lsg/core/linalg.hpp"

namespace lsg {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule with `order` nodes on [a, b].
QuadratureRule gauss_legendre(int order, double a = -1.0, double b = 1.0);

struct SphereNode {
  Vec direction;
  double weight;
};

/// Product rule on the unit sphere S^{n-1} in R^n: Gauss-Legendre in every polar
/// angle (with the sin^k weight folded in) times the trapezoid rule in azimuth.
/// Weights sum to |S^{n-1}| up to rounding.
std::vector<SphereNode> sphere_rule(int n, int polar_order, int azimuth_order);

/// Default orders used by the radial backend for a given dimension.
int default_polar_order(int n);

}  // namespace lsg
