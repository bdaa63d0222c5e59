#pragma once

#include <string>
#include <vector>

#include "lsg/core/linalg.hpp"

namespace lsg {

/// Geometry of a level set at one quadrature sample. All norms are taken in the
/// background metric; `normal` is the contravariant unit normal Du/|Du|.
struct SurfaceSample {
  Vec point;
  Vec normal;
  double weight = 0.0;
  double u = 0.0;
  double grad_norm = 0.0;
  double mean_curvature = 0.0;
  double shape_norm2 = 0.0;
  double scalar_curvature = 0.0;
  double hess_norm2 = 0.0;
  double hess_nn = 0.0;
  double hess_dudu = 0.0;
  double grad_grad_norm2 = 0.0;
  double laplacian = 0.0;
  /// 1 - u^2 supplied without cancellation when the field knows it, else from u.
  double one_minus_u2 = 1.0;
};

struct LevelSurface {
  double level = 0.0;
  int dimension = 0;
  std::vector<SurfaceSample> samples;
  double excluded_area = 0.0;
  int components = 1;
  bool degenerate = false;
  bool flat_background = true;
  bool known_static = false;
  /// Shift applied to the requested level (critical-value tie-breaking).
  double perturbation = 0.0;
  std::string backend;
  std::string source;

  double area() const;
  double max_grad_norm() const;
};

}  // namespace lsg
