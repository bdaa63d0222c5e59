#include <cmath>

#include "common.hpp"
#include "lsg/inequalities/inequalities.hpp"

namespace lsg {

using namespace detail;

InequalityReport willmore(const LevelSurface& surface, const StaticConfig& config, WillmoreMode mode,
                          const InequalityOptions& options) {
  require_samples(surface);
  const int n = config.n();
  const double lhs = std::pow(unit_sphere_area(n), 1.0 / (n - 1.0));
  const double t = surface.level;
  const InequalityParams params = params_for(surface, config, n - 1.0);
  auto mean = [n](const SurfaceSample& s) { return s.mean_curvature / (n - 1.0); };
  switch (mode) {
    case WillmoreMode::Static: {
      if (n < 4) throw DomainError("static Willmore inequality needs n >= 4");
      if (!interior_level(t)) throw DomainError("static Willmore inequality needs t in (0, 1)");
      const double rhs = lp_norm(surface, mean, n - 1.0) / t;
      return make_inequality("willmore_static", lhs, rhs, params, options.tolerances, true,
                             provenance(surface));
    }
    case WillmoreMode::Boundary: {
      if (n < 4) throw DomainError("boundary Willmore inequality needs n >= 4");
      if (!boundary_level(t)) throw DomainError("boundary Willmore inequality needs t = 0");
      const double rs = (n - 1.0) * (n - 2.0);
      const double rhs = std::sqrt(
          lp_norm(surface, [rs](const SurfaceSample& s) { return s.scalar_curvature / rs; }, 0.5 * (n - 1.0)));
      return make_inequality("willmore_boundary", lhs, rhs, params, options.tolerances, true,
                             provenance(surface));
    }
    case WillmoreMode::Flat: {
      std::string note = surface.flat_background ? "flat background" : "background not flat";
      return make_inequality("willmore_flat", lhs, lp_norm(surface, mean, n - 1.0), params,
                             options.tolerances, surface.flat_background, note);
    }
  }
  throw DomainError("unknown Willmore mode");
}

}  // namespace lsg
