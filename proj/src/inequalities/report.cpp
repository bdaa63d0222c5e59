#include "lsg/inequalities/report.hpp"

#include <algorithm>
#include <cmath>

#include "lsg/core/errors.hpp"

namespace lsg {

void Tolerances::validate() const {
  if (!(tol > 0.0) || !(rigidity_tol > 0.0)) throw ConfigError("tolerances must be positive");
  if (rigidity_tol > tol) throw ConfigError("rigidity tolerance must not exceed tolerance");
}

InequalityReport make_inequality(std::string name, double lhs, double rhs, InequalityParams params,
                                 const Tolerances& tol, bool rigidity_allowed, std::string note) {
  tol.validate();
  InequalityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  const bool finite = std::isfinite(r.slack);
  r.satisfied = finite && r.slack >= -tol.tol * scale;
  r.rigidity = rigidity_allowed && finite && r.satisfied && scale > 0.0 &&
               std::abs(r.slack) <= tol.rigidity_tol * scale;
  r.params = params;
  r.note = std::move(note);
  r.tolerances = tol;
  return r;
}

InequalityReport make_identity(std::string name, double residual, double scale,
                               InequalityParams params, const Tolerances& tol,
                               bool rigidity_allowed, std::string note) {
  tol.validate();
  InequalityReport r;
  r.name = std::move(name);
  r.lhs = residual;
  r.rhs = 0.0;
  r.slack = -residual;
  const double s = std::max(scale, 1e-300);
  const bool finite = std::isfinite(residual);
  r.satisfied = finite && residual <= tol.tol * s;
  r.rigidity = rigidity_allowed && finite && residual <= tol.rigidity_tol * s;
  r.params = params;
  r.note = std::move(note);
  r.tolerances = tol;
  return r;
}

std::string provenance(const LevelSurface& surface) {
  return surface.known_static ? "static solution (closed form)" : "hypotheses-not-verified";
}

InequalityParams params_for(const LevelSurface& surface, const StaticConfig& config, double p) {
  return {config.n(), config.m(), p, surface.level};
}

}  // namespace lsg
