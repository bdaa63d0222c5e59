#pragma once

#include <functional>
#include <limits>
#include <span>

#include "lsg/core/surface.hpp"

namespace lsg {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// |S^{n-1}| = 2 pi^{n/2} / Gamma(n/2).
double unit_sphere_area(int n);

using SurfaceFunction = std::function<double(const SurfaceSample&)>;

/// [ (1/|S|) sum w |f|^p ]^{1/p}; p = kInf gives max |f|.
double averaged_lp_norm(const LevelSurface& surface, const SurfaceFunction& f, double p);
double averaged_lp_norm(std::span<const double> values, std::span<const double> weights, double p);

/// Unaveraged (sum w |f|^p)^{1/p}; p = kInf gives max |f|.
double lp_norm(const LevelSurface& surface, const SurfaceFunction& f, double p);

/// [ |Du|_{L^1_0} / |Du|_{L^p_0} ]^{p(n-2)/((p-1)(n-1))} on the sampled level set.
double k_factor(const LevelSurface& surface, int n, double p);
double k_factor(std::span<const double> grad_norms, std::span<const double> weights, int n, double p);

/// Weighted coefficient of variation (std/|mean|) of f over the surface.
double coefficient_of_variation(const LevelSurface& surface, const SurfaceFunction& f);
bool is_constant_over(const LevelSurface& surface, const SurfaceFunction& f, double tol = 1e-9);

}  // namespace lsg
