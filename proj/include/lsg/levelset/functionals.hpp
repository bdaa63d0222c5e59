#pragma once

#include "lsg/core/config.hpp"
#include "lsg/core/field.hpp"
#include "lsg/core/surface.hpp"
#include "lsg/levelset/extract.hpp"

namespace lsg {

/// W_p = sum w |Du|^p, the unrenormalized level-set integral.
double w_p(const LevelSurface& surface, double p);

/// U_p(t) = (2m/(1-t^2))^{(p-1)(n-1)/(n-2)} W_p(t) with t = surface.level.
double u_p(const LevelSurface& surface, const StaticConfig& config, double p);
double u_p(const ScalarField& field, const StaticConfig& config, double t, double p,
           const ExtractOptions& options = {});

/// dW_p/dt = -(p-1) sum w |Du|^{p-1} H, exact for any harmonic field.
double wp_derivative_formula(const LevelSurface& surface, double p);

/// -(p-1)(2m/(1-t^2))^alpha sum w |Du|^{p-1} [H - 2((n-1)/(n-2)) u|Du|/(1-u^2)].
/// Requires p >= 2, or p >= 1 on surfaces with nothing excluded.
double up_derivative_formula(const LevelSurface& surface, const StaticConfig& config, double p);
double up_derivative_formula(const ScalarField& field, const StaticConfig& config, double t,
                             double p, const ExtractOptions& options = {});

/// max |Du|^{p-1} |H| over the samples.
double max_derivative_integrand(const LevelSurface& surface, double p);

/// Phi_p = integral of |grad phi|_g^p over the level set in the conformal metric g.
double phi_p(const LevelSurface& surface, const StaticConfig& config, double p);

/// K(n, p, t) on the extracted level set.
double k_factor(const ScalarField& field, double t, double p, const ExtractOptions& options = {});

}  // namespace lsg
