#include "lsg/harmonic/multicenter.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "lsg/core/errors.hpp"

namespace lsg {

MultiCenterField::MultiCenterField(int n, std::vector<PointCharge> centers)
    : n_(n), centers_(std::move(centers)), metric_(n) {
  if (n < 3 || n > kMaxDim) throw DomainError("multi-center field needs 3 <= n <= 8");
  if (centers_.empty()) throw DomainError("multi-center field needs at least one center");
  for (const auto& c : centers_) {
    if (c.position.size() != n) throw DomainError("center dimension mismatch");
    if (!(c.weight > 0.0)) throw DomainError("center weights must be positive");
  }
}

MultiCenterField MultiCenterField::monopole(int n, double m) {
  return MultiCenterField(n, {{Vec::Zero(n), m}});
}

MultiCenterField MultiCenterField::two_center(int n, double separation, double m) {
  Vec a = Vec::Zero(n), b = Vec::Zero(n);
  a(0) = -0.5 * separation;
  b(0) = 0.5 * separation;
  return MultiCenterField(n, {{a, 0.5 * m}, {b, 0.5 * m}});
}

double MultiCenterField::distance_to_centers(const Vec& x) const {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& c : centers_) d = std::min(d, (x - c.position).norm());
  return d;
}

double MultiCenterField::value(const Vec& x) const {
  double u = 1.0;
  for (const auto& c : centers_) {
    const double r = (x - c.position).norm();
    u -= c.weight * std::pow(r, 2.0 - n_);
  }
  return u;
}

FieldSample MultiCenterField::evaluate(const Vec& x) const {
  if (x.size() != n_) throw DomainError("point dimension mismatch");
  FieldSample s{1.0, Vec::Zero(n_), Mat::Zero(n_, n_)};
  const Mat id = Mat::Identity(n_, n_);
  for (const auto& c : centers_) {
    const Vec y = x - c.position;
    const double r = y.norm();
    if (!(r > 1e-12)) throw SingularPointError("multi-center field evaluated at a center");
    const double rn = std::pow(r, -n_);
    s.u -= c.weight * rn * r * r;
    s.grad += c.weight * (n_ - 2) * rn * y;
    s.hess += c.weight * (n_ - 2) * rn * (id - (n_ / (r * r)) * y * y.transpose());
  }
  return s;
}

double MultiCenterField::flat_laplacian(const Vec& x) const {
  return evaluate(x).hess.trace();
}

double MultiCenterField::mass() const {
  double m = 0.0;
  for (const auto& c : centers_) m += c.weight;
  return m;
}

std::optional<Vec> MultiCenterField::symmetry_center() const {
  if (centers_.size() == 1) return centers_.front().position;
  return std::nullopt;
}

std::optional<double> MultiCenterField::level_radius(double t) const {
  if (centers_.size() != 1) return std::nullopt;
  if (!(t < 1.0)) throw EmptyLevelError("level t >= 1 is not attained");
  return std::pow(centers_.front().weight / (1.0 - t), 1.0 / (n_ - 2));
}

std::optional<Box> MultiCenterField::level_bounds(double t) const {
  if (!(t < 1.0)) throw EmptyLevelError("level t >= 1 is not attained");
  // Outside this radius around every center, u > t.
  const double rho = std::pow(mass() / (1.0 - t), 1.0 / (n_ - 2));
  Vec lo = centers_.front().position, hi = lo;
  for (const auto& c : centers_) {
    lo = lo.cwiseMin(c.position);
    hi = hi.cwiseMax(c.position);
  }
  return Box{(lo.array() - rho).matrix(), (hi.array() + rho).matrix()};
}

std::optional<Vec> MultiCenterField::star_origin() const {
  Vec c = Vec::Zero(n_);
  for (const auto& pc : centers_) c += pc.weight * pc.position;
  return Vec(c / mass());
}

std::string MultiCenterField::describe() const {
  std::ostringstream os;
  os << "multicenter(n=" << n_ << ", centers=" << centers_.size() << ", m=" << mass() << ")";
  return os.str();
}

}  // namespace lsg
