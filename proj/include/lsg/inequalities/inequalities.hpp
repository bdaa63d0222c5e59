#pragma once

#include <utility>
#include <vector>

#include "lsg/inequalities/report.hpp"

namespace lsg {

/// (t/(1-t^2)) int 2|Du|^p/(n-2) <= int |Du|^{p-1} H/(n-1).
InequalityReport integral_inequality(const LevelSurface& surface, const StaticConfig& config,
                                     double p, const InequalityOptions& options = {});

struct OverdeterminedResiduals {
  /// max |(u/(1-u^2)) 2|Du|/(n-2) - H/(n-1)|.
  InequalityReport interior;
  /// max |(2|Du|/(n-2))^2 - R^Sigma/((n-1)(n-2))|.
  InequalityReport boundary;
};
OverdeterminedResiduals overdetermined_residuals(const LevelSurface& surface,
                                                 const StaticConfig& config,
                                                 const InequalityOptions& options = {});

/// (t/(1-t^2)) |2Du/(n-2)|_{L^p} <= |H/(n-1)|_{L^p}; p = kInf for the sup bound.
InequalityReport lp_bounds(const LevelSurface& surface, const StaticConfig& config, double p,
                           const InequalityOptions& options = {});

/// |2Du/(n-2)|_{L^p} <= sqrt(|R^Sigma/((n-1)(n-2))|_{L^{p/2}}) on the boundary level.
InequalityReport boundary_lp_bounds(const LevelSurface& surface, const StaticConfig& config,
                                    double p, const InequalityOptions& options = {});

/// 4((n-1)/(n-2)) int |Du|^p <= int |Du|^{p-2} R^Sigma on the boundary level.
InequalityReport boundary_integral_inequality(const LevelSurface& surface,
                                              const StaticConfig& config, double p,
                                              const InequalityOptions& options = {});

struct MassSandwich {
  double lower = 0.0;
  double m = 0.0;
  double upper = 0.0;
  std::vector<InequalityReport> reports;
};

/// Two-sided mass bound with K(n,p,t); the interior form for t in (0,1), the
/// boundary form (with R^Sigma) for t = 0.
MassSandwich mass_sandwich(const LevelSurface& surface, const StaticConfig& config, double p,
                           const InequalityOptions& options = {});

/// Interior: |H/(n-1)|_{L^p_0} <= t K (|S|/|Sigma|)^{1/(n-1)}.
/// Boundary: the scalar-curvature bound with K(n,p,0), the Penrose pair and the
/// pointwise inverse-radius condition.
std::vector<InequalityReport> penrose_and_sufficient_conditions(const LevelSurface& surface,
                                                                const StaticConfig& config,
                                                                double p,
                                                                const InequalityOptions& options = {});

/// U_p''(0) = -((p-1)/2)(2m)^alpha int |Du|^{p-2} [R^Sigma - 4((n-1)/(n-2))|Du|^2].
double boundary_second_derivative(const LevelSurface& surface, const StaticConfig& config, double p);
/// Report form of U_p''(0) <= 0.
InequalityReport boundary_second_derivative_report(const LevelSurface& surface,
                                                   const StaticConfig& config, double p,
                                                   const InequalityOptions& options = {});

enum class WillmoreMode { Static, Boundary, Flat };

/// Static: |S|^{1/(n-1)} <= (1/t)|H/(n-1)|_{L^{n-1}} (n >= 4).
/// Boundary: |S|^{1/(n-1)} <= sqrt(|R^Sigma/((n-1)(n-2))|_{L^{(n-1)/2}}) (n >= 4).
/// Flat: |S|^{1/(n-1)} <= |H/(n-1)|_{L^{n-1}} (n >= 3).
InequalityReport willmore(const LevelSurface& surface, const StaticConfig& config, WillmoreMode mode,
                          const InequalityOptions& options = {});

/// |Sigma|^{-(n-3)/(n-1)} int R^Sigma.
double einstein_hilbert(const LevelSurface& surface);
/// (n-1)(n-2)|S^{n-1}|^{2/(n-1)}, the value on the unit round sphere.
double einstein_hilbert_round_sphere(int n);
/// E(round sphere) <= E(boundary), n >= 4.
InequalityReport yamabe_comparison(const LevelSurface& surface, const StaticConfig& config,
                                   const InequalityOptions& options = {});

/// Three-dimensional uniqueness chain on a connected boundary: Gauss-Bonnet
/// bound int R <= 8 pi, and equality of the two Penrose bounds.
std::vector<InequalityReport> black_hole_uniqueness(const LevelSurface& surface,
                                                    const StaticConfig& config,
                                                    const InequalityOptions& options = {});

}  // namespace lsg
