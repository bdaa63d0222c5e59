#pragma once

#include <optional>

#include "lsg/core/field.hpp"
#include "lsg/core/surface.hpp"

namespace lsg {

enum class Backend {
  /// Radial when the level is a coordinate sphere, else star-shaped, else triangulation.
  Auto,
  /// Coordinate sphere with product quadrature.
  Radial,
  /// Ray-traced star-shaped surface with product quadrature.
  Star,
  /// Isosurface triangulation (n = 3 only).
  Triangulation,
};

Backend parse_backend(const std::string& name);
std::string backend_name(Backend b);

struct ExtractOptions {
  Backend backend = Backend::Auto;
  /// Polar Gauss-Legendre order; 0 selects a dimension-dependent default.
  int polar_order = 0;
  /// Azimuthal trapezoid order; 0 selects twice the polar order.
  int azimuth_order = 0;
  /// Triangulation cells per axis for analytic fields (grid fields use their own nodes).
  int resolution = 128;
  /// Samples with |Du| below eps_crit * max|Du| are excluded.
  double eps_crit = 1e-6;
  /// Above this excluded fraction of the area the surface is flagged degenerate.
  double max_excluded_fraction = 0.05;
  /// Radial sampling points per ray when searching for star-shaped crossings.
  int ray_scan_steps = 256;
  std::optional<Vec> origin;
  std::optional<Box> box;
};

LevelSurface extract(const ScalarField& field, double t, const ExtractOptions& options = {});

LevelSurface extract_radial(const ScalarField& field, double t, const ExtractOptions& options);
LevelSurface extract_star(const ScalarField& field, double t, const ExtractOptions& options);
LevelSurface extract_triangulation(const ScalarField& field, double t,
                                   const ExtractOptions& options);

}  // namespace lsg
