#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "lsg/core/config.hpp"
#include "lsg/core/surface.hpp"

namespace lsg {

struct Tolerances {
  /// Relative tolerance for the satisfied flag.
  double tol = 1e-6;
  /// Relative tolerance for the equality (rigidity) flag; must not exceed tol.
  double rigidity_tol = 1e-8;

  void validate() const;
};

/// Admissible exponent range for the level-set inequalities.
enum class ExponentPolicy {
  /// p >= 3.
  Standard,
  /// p >= 2 - 1/(n-1), only on level sets with nothing excluded.
  Refined,
};

struct InequalityOptions {
  Tolerances tolerances;
  ExponentPolicy policy = ExponentPolicy::Standard;
};

struct InequalityParams {
  int n = 0;
  double m = 0.0;
  double p = 0.0;
  double t = 0.0;
};

/// Outcome of one inequality lhs <= rhs (or an identity lhs = rhs).
struct InequalityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool satisfied = false;
  bool rigidity = false;
  InequalityParams params;
  std::string note;
  Tolerances tolerances;
};

/// Builds an inequality report; rigidity is only reported when `rigidity_allowed`.
InequalityReport make_inequality(std::string name, double lhs, double rhs, InequalityParams params,
                                 const Tolerances& tol, bool rigidity_allowed, std::string note);

/// Builds an identity report for a residual (expected zero) measured against `scale`.
InequalityReport make_identity(std::string name, double residual, double scale,
                               InequalityParams params, const Tolerances& tol,
                               bool rigidity_allowed, std::string note);

/// Provenance note: closed-form static solution or "hypotheses-not-verified".
std::string provenance(const LevelSurface& surface);
InequalityParams params_for(const LevelSurface& surface, const StaticConfig& config, double p);

nlohmann::ordered_json reports_to_json(const std::vector<InequalityReport>& reports);
void write_reports_text(const std::vector<InequalityReport>& reports, std::ostream& out);

}  // namespace lsg
