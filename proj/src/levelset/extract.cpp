#include "lsg/levelset/extract.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/tools/roots.hpp>

#include "lsg/core/errors.hpp"
#include "lsg/core/quadrature.hpp"
#include "lsg/levelset/geometry.hpp"
#include "detail.hpp"

namespace lsg {

Backend parse_backend(const std::string& name) {
  if (name == "auto") return Backend::Auto;
  if (name == "radial") return Backend::Radial;
  if (name == "star") return Backend::Star;
  if (name == "triangulation") return Backend::Triangulation;
  throw ConfigError("unknown extraction backend '" + name + "'");
}

std::string backend_name(Backend b) {
  switch (b) {
    case Backend::Auto: return "auto";
    case Backend::Radial: return "radial";
    case Backend::Star: return "star";
    case Backend::Triangulation: return "triangulation";
  }
  return "auto";
}

namespace {

std::vector<SphereNode> rule_for(int n, const ExtractOptions& o) {
  const int polar = o.polar_order > 0 ? o.polar_order : default_polar_order(n);
  const int azimuth = o.azimuth_order > 0 ? o.azimuth_order : 2 * polar;
  return sphere_rule(n, polar, azimuth);
}

}  // namespace

namespace detail {

LevelSurface start_surface(const ScalarField& field, double t, const char* backend) {
  LevelSurface s;
  s.level = t;
  s.dimension = field.dimension();
  s.flat_background = field.metric().is_flat();
  s.known_static = field.is_known_static();
  s.backend = backend;
  s.source = field.describe();
  return s;
}

// Drops near-critical samples into excluded_area and sets the degenerate flag.
void finalize_surface(LevelSurface& surface, const ExtractOptions& options) {
  if (surface.samples.empty()) throw EmptyLevelError("level set has no samples");
  const double threshold = options.eps_crit * surface.max_grad_norm();
  std::vector<SurfaceSample> kept;
  kept.reserve(surface.samples.size());
  for (auto& s : surface.samples) {
    if (s.grad_norm < threshold || !(s.grad_norm > 0.0)) surface.excluded_area += s.weight;
    else kept.push_back(std::move(s));
  }
  surface.samples = std::move(kept);
  const double total = surface.area() + surface.excluded_area;
  if (surface.samples.empty() || !(total > 0.0) ||
      surface.excluded_area > options.max_excluded_fraction * total) {
    surface.degenerate = true;
  }
}

}  // namespace detail

using detail::finalize_surface;
using detail::start_surface;

LevelSurface extract_radial(const ScalarField& field, double t, const ExtractOptions& options) {
  const auto center = field.symmetry_center();
  const auto rho = field.level_radius(t);
  if (!center || !rho) throw ExtractionError("radial backend needs a rotationally symmetric field");
  const int n = field.dimension();
  LevelSurface surface = start_surface(field, t, "radial");
  const double rn = std::pow(*rho, n - 1);
  for (const auto& node : rule_for(n, options)) {
    const Vec x = *center + *rho * node.direction;
    SurfaceSample s = sample_geometry(field, x);
    const MetricSample ms = field.metric().at(x);
    s.weight = node.weight * rn * area_factor(ms, node.direction);
    surface.samples.push_back(std::move(s));
  }
  finalize_surface(surface, options);
  return surface;
}

namespace {

double outer_radius(const Box& box, const Vec& origin) {
  double r2 = 0.0;
  for (int a = 0; a < origin.size(); ++a) {
    const double d = std::max(std::abs(box.lo(a) - origin(a)), std::abs(box.hi(a) - origin(a)));
    r2 += d * d;
  }
  return std::sqrt(r2);
}

// Radius of the unique crossing of {u = t} along origin + r*dir.
double ray_crossing(const ScalarField& field, double t, const Vec& origin, const Vec& dir,
                    double r_max, int steps) {
  auto g = [&](double r) {
    try {
      return field.value(origin + r * dir) - t;
    } catch (const SingularPointError&) {
      return -std::numeric_limits<double>::infinity();
    }
  };
  double prev_r = r_max;
  double prev = g(r_max);
  if (!(prev > 0.0)) throw ExtractionError("level set not enclosed by the search radius");
  int crossings = 0;
  double lo = 0.0, hi = 0.0;
  for (int i = steps - 1; i >= 1; --i) {
    const double r = r_max * i / steps;
    const double v = g(r);
    if ((v > 0.0) != (prev > 0.0)) {
      ++crossings;
      if (crossings == 1) {
        lo = r;
        hi = prev_r;
      }
    }
    prev = v;
    prev_r = r;
  }
  if (crossings == 0) throw EmptyLevelError("ray does not meet the level set");
  if (crossings > 1) throw ExtractionError("level set is not star-shaped about the origin");
  boost::uintmax_t iters = 200;
  const auto tol = boost::math::tools::eps_tolerance<double>(52);
  const auto root = boost::math::tools::toms748_solve(g, lo, hi, tol, iters);
  return 0.5 * (root.first + root.second);
}

}  // namespace

LevelSurface extract_star(const ScalarField& field, double t, const ExtractOptions& options) {
  const int n = field.dimension();
  const auto origin = options.origin ? options.origin : field.star_origin();
  if (!origin) throw ExtractionError("star backend needs an origin");
  const auto box = options.box ? options.box : field.level_bounds(t);
  if (!box) throw ExtractionError("star backend needs level bounds");
  const double r_max = 1.05 * outer_radius(*box, *origin);
  LevelSurface surface = start_surface(field, t, "star");
  for (const auto& node : rule_for(n, options)) {
    const double r = ray_crossing(field, t, *origin, node.direction, r_max, options.ray_scan_steps);
    const Vec x = *origin + r * node.direction;
    FieldSample fs;
    SurfaceSample s = sample_geometry(field, x, &fs);
    const double radial_slope = node.direction.dot(fs.grad);
    const double flat_norm = fs.grad.norm();
    if (!(radial_slope > 0.0)) throw ExtractionError("level set is not star-shaped about the origin");
    const MetricSample ms = field.metric().at(x);
    s.weight = node.weight * std::pow(r, n - 1) * (flat_norm / radial_slope) *
               area_factor(ms, fs.grad / flat_norm);
    surface.samples.push_back(std::move(s));
  }
  finalize_surface(surface, options);
  return surface;
}

LevelSurface extract(const ScalarField& field, double t, const ExtractOptions& options) {
  switch (options.backend) {
    case Backend::Radial: return extract_radial(field, t, options);
    case Backend::Star: return extract_star(field, t, options);
    case Backend::Triangulation: return extract_triangulation(field, t, options);
    case Backend::Auto: break;
  }
  if (field.symmetry_center() && field.level_radius(t)) return extract_radial(field, t, options);
  if (field.star_origin() || options.origin) {
    try {
      return extract_star(field, t, options);
    } catch (const EmptyLevelError&) {
      if (field.dimension() != 3) throw;
    } catch (const ExtractionError&) {
      if (field.dimension() != 3) throw;
    }
  }
  return extract_triangulation(field, t, options);
}

}  // namespace lsg
