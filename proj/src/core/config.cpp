#include "lsg/core/config.hpp"

#include <cmath>
#include <string>

#include "lsg/core/errors.hpp"

namespace lsg {

StaticConfig::StaticConfig(int n, double m, double u0) : n_(n), m_(m), u0_(u0) {
  if (n < 3) throw DomainError("dimension must be at least 3, got " + std::to_string(n));
  if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("mass must be positive and finite");
  if (!(u0 >= 0.0 && u0 < 1.0)) throw DomainError("boundary value must lie in [0, 1)");
}

double StaticConfig::up_exponent(double p) const {
  return (p - 1.0) * (n_ - 1) / (n_ - 2);
}

double StaticConfig::up_prefactor(double t, double p) const {
  if (!(t > -1.0 && t < 1.0)) throw DomainError("level must lie in (-1, 1)");
  return up_prefactor_from((1.0 - t) * (1.0 + t), p);
}

double StaticConfig::up_prefactor_from(double one_minus_t2, double p) const {
  if (!(one_minus_t2 > 0.0)) throw DomainError("1 - t^2 must be positive");
  return std::exp(up_exponent(p) * std::log(2.0 * m_ / one_minus_t2));
}

LevelValue LevelValue::from_t(double t) {
  if (!(t > -1.0 && t < 1.0)) throw DomainError("level t must lie in (-1, 1)");
  return LevelValue(t, std::log1p(t) - std::log1p(-t));
}

LevelValue LevelValue::from_s(double s) {
  if (!std::isfinite(s)) throw DomainError("conformal level s must be finite");
  return LevelValue(std::tanh(0.5 * s), s);
}

LevelValue LevelValue::make(double t, double s) {
  const LevelValue ref = from_s(s);
  if (std::abs(ref.t() - t) > 1e-14 * std::max(1.0, std::abs(t))) {
    throw DomainError("inconsistent level pair: t != tanh(s/2)");
  }
  return LevelValue(t, s);
}

double LevelValue::one_minus_t2() const {
  const double c = std::cosh(0.5 * s_);
  return 1.0 / (c * c);
}

}  // namespace lsg
