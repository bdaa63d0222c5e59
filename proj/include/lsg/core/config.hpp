#pragma once

namespace lsg {

/// Dimension, mass and boundary value of a static potential.
class StaticConfig {
 public:
  /// Throws DomainError unless n >= 3, m > 0 and 0 <= u0 < 1.
  StaticConfig(int n, double m, double u0 = 0.0);

  int n() const { return n_; }
  double m() const { return m_; }
  double u0() const { return u0_; }

  /// (p-1)(n-1)/(n-2), the exponent of the renormalizing prefactor.
  double up_exponent(double p) const;
  /// (2m/(1-t^2))^up_exponent(p); one_minus_t2 may be passed to avoid cancellation.
  double up_prefactor(double t, double p) const;
  double up_prefactor_from(double one_minus_t2, double p) const;

 private:
  int n_;
  double m_;
  double u0_;
};

/// A potential level t paired with its conformal value s = log((1+t)/(1-t)).
class LevelValue {
 public:
  static LevelValue from_t(double t);
  static LevelValue from_s(double s);
  /// Checks that t = tanh(s/2) to 1e-14 relative.
  static LevelValue make(double t, double s);

  double t() const { return t_; }
  double s() const { return s_; }
  /// 1 - t^2 computed without cancellation from s.
  double one_minus_t2() const;

 private:
  LevelValue(double t, double s) : t_(t), s_(s) {}
  double t_;
  double s_;
};

}  // namespace lsg
