#pragma once

#include <cmath>
#include <string>

#include "lsg/core/errors.hpp"
#include "lsg/core/norms.hpp"
#include "lsg/inequalities/report.hpp"

namespace lsg::detail {

inline void require_samples(const LevelSurface& surface) {
  if (surface.samples.empty() || surface.degenerate)
    throw DegenerateSurfaceError("inequality evaluated on a degenerate level set");
}

inline void require_exponent(const LevelSurface& surface, int n, double p,
                             const InequalityOptions& options) {
  if (std::isinf(p) && p > 0) return;
  if (options.policy == ExponentPolicy::Standard) {
    if (!(p >= 3.0)) throw DomainError("exponent p must be at least 3");
    return;
  }
  if (!(p >= 2.0 - 1.0 / (n - 1)))
    throw DomainError("exponent p must be at least 2 - 1/(n-1) under the refined policy");
  if (surface.excluded_area > 0.0)
    throw DomainError("refined exponent range needs a level set with nothing excluded");
}

inline bool interior_level(double t) { return t > 0.0 && t < 1.0; }
inline bool boundary_level(double t) { return std::abs(t) <= 1e-14; }

inline double area_ratio(const LevelSurface& surface, int n) {
  return surface.area() / unit_sphere_area(n);
}

}  // namespace lsg::detail
