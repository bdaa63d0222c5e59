#include "lsg/harmonic/grid.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "lsg/core/errors.hpp"

namespace lsg {

Vec GridGeometry::node(std::size_t i, std::size_t j, std::size_t k) const {
  Vec x(3);
  x << origin[0] + spacing * i, origin[1] + spacing * j, origin[2] + spacing * k;
  return x;
}

GridGeometry GridGeometry::centered(double half_width, double spacing) {
  if (!(half_width > 0.0) || !(spacing > 0.0)) throw DomainError("grid extents must be positive");
  const double cells = 2.0 * half_width / spacing;
  const auto n = static_cast<std::size_t>(std::llround(cells));
  if (std::abs(cells - n) > 1e-9 * cells || n < 4) {
    throw DomainError("grid spacing must divide the width into at least four cells");
  }
  GridGeometry g;
  g.dims = {n + 1, n + 1, n + 1};
  g.spacing = spacing;
  g.origin = {-half_width, -half_width, -half_width};
  return g;
}

GridField::GridField(GridGeometry geometry, std::vector<double> values,
                     std::vector<Excision> excisions, double mass)
    : geometry_(geometry), values_(std::move(values)), excisions_(std::move(excisions)),
      mass_(mass), metric_(3) {
  if (values_.size() != geometry_.size()) throw DomainError("grid value count mismatch");
  for (auto d : geometry_.dims)
    if (d < 4) throw DomainError("grid needs at least four nodes per axis");
  if (!(geometry_.spacing > 0.0)) throw DomainError("grid spacing must be positive");
}

bool GridField::active(std::size_t i, std::size_t j, std::size_t k) const {
  return !std::isnan(values_[geometry_.index(i, j, k)]);
}

double GridField::try_at(long i, long j, long k) const {
  const auto& d = geometry_.dims;
  if (i < 0 || j < 0 || k < 0 || i >= static_cast<long>(d[0]) || j >= static_cast<long>(d[1]) ||
      k >= static_cast<long>(d[2])) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return values_[geometry_.index(i, j, k)];
}

double GridField::at(long i, long j, long k) const {
  const auto& d = geometry_.dims;
  if (i < 0 || j < 0 || k < 0 || i >= static_cast<long>(d[0]) || j >= static_cast<long>(d[1]) ||
      k >= static_cast<long>(d[2])) {
    throw SingularPointError("grid stencil leaves the grid");
  }
  const double v = values_[geometry_.index(i, j, k)];
  if (std::isnan(v)) throw SingularPointError("grid stencil touches an excised node");
  return v;
}

namespace {

// Catmull-Rom weights for nodes -1, 0, 1, 2 at fraction f, and their f-derivatives.
void cr_weights(double f, double w[4], double dw[4]) {
  const double f2 = f * f, f3 = f2 * f;
  w[0] = 0.5 * (-f3 + 2 * f2 - f);
  w[1] = 0.5 * (3 * f3 - 5 * f2 + 2);
  w[2] = 0.5 * (-3 * f3 + 4 * f2 + f);
  w[3] = 0.5 * (f3 - f2);
  dw[0] = 0.5 * (-3 * f2 + 4 * f - 1);
  dw[1] = 0.5 * (9 * f2 - 10 * f);
  dw[2] = 0.5 * (-9 * f2 + 8 * f + 1);
  dw[3] = 0.5 * (3 * f2 - 2 * f);
}

struct CellLocation {
  long base[3];
  double frac[3];
};

CellLocation locate(const GridGeometry& g, const Vec& x) {
  if (x.size() != 3) throw DomainError("grid fields are three-dimensional");
  CellLocation c;
  for (int a = 0; a < 3; ++a) {
    const double q = (x(a) - g.origin[a]) / g.spacing;
    long b = static_cast<long>(std::floor(q));
    const long maxb = static_cast<long>(g.dims[a]) - 2;
    if (b < 0 || b > maxb) throw SingularPointError("point outside the grid");
    c.base[a] = b;
    c.frac[a] = q - b;
  }
  return c;
}

}  // namespace

double GridField::value(const Vec& x) const {
  const CellLocation c = locate(geometry_, x);
  double w[3][4], dw[3][4];
  for (int a = 0; a < 3; ++a) cr_weights(c.frac[a], w[a], dw[a]);
  double u = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int d = 0; d < 4; ++d)
        u += w[0][a] * w[1][b] * w[2][d] *
             at(c.base[0] - 1 + a, c.base[1] - 1 + b, c.base[2] - 1 + d);
  return u;
}

namespace {

// Node values around a cell, offsets -3..4 per axis; NaN where unavailable.
struct Block {
  static constexpr int kSize = 8;
  double v[kSize][kSize][kSize];

  double at(int a, int b, int c) const {
    const double x = v[a][b][c];
    if (std::isnan(x)) throw SingularPointError("grid stencil touches an excised node or leaves the grid");
    return x;
  }
  // 4th-order centered first derivative, 2nd order when the wide arm is missing.
  double d1(int a, int b, int c, int axis, double h) const {
    int o[3] = {0, 0, 0};
    o[axis] = 1;
    const double p1 = at(a + o[0], b + o[1], c + o[2]);
    const double m1 = at(a - o[0], b - o[1], c - o[2]);
    const int a2 = a + 2 * o[0], b2 = b + 2 * o[1], c2 = c + 2 * o[2];
    const int a3 = a - 2 * o[0], b3 = b - 2 * o[1], c3 = c - 2 * o[2];
    const bool wide = a2 < kSize && b2 < kSize && c2 < kSize && a3 >= 0 && b3 >= 0 && c3 >= 0 &&
                      !std::isnan(v[a2][b2][c2]) && !std::isnan(v[a3][b3][c3]);
    if (!wide) return (p1 - m1) / (2.0 * h);
    return (-v[a2][b2][c2] + 8.0 * p1 - 8.0 * m1 + v[a3][b3][c3]) / (12.0 * h);
  }
  Mat d2(int a, int b, int c, double h) const {
    const double h2 = h * h;
    const double c0 = at(a, b, c);
    Mat H(3, 3);
    H(0, 0) = (at(a + 1, b, c) - 2 * c0 + at(a - 1, b, c)) / h2;
    H(1, 1) = (at(a, b + 1, c) - 2 * c0 + at(a, b - 1, c)) / h2;
    H(2, 2) = (at(a, b, c + 1) - 2 * c0 + at(a, b, c - 1)) / h2;
    H(0, 1) = H(1, 0) =
        (at(a + 1, b + 1, c) - at(a + 1, b - 1, c) - at(a - 1, b + 1, c) + at(a - 1, b - 1, c)) / (4 * h2);
    H(0, 2) = H(2, 0) =
        (at(a + 1, b, c + 1) - at(a + 1, b, c - 1) - at(a - 1, b, c + 1) + at(a - 1, b, c - 1)) / (4 * h2);
    H(1, 2) = H(2, 1) =
        (at(a, b + 1, c + 1) - at(a, b + 1, c - 1) - at(a, b - 1, c + 1) + at(a, b - 1, c - 1)) / (4 * h2);
    return H;
  }
};

}  // namespace

// Catmull-Rom interpolation of nodal values, 4th-order nodal gradients and
// 2nd-order nodal Hessians.
FieldSample GridField::interpolate(const Vec& x, bool with_hessian) const {
  const CellLocation c = locate(geometry_, x);
  double w[3][4], dw[3][4];
  for (int a = 0; a < 3; ++a) cr_weights(c.frac[a], w[a], dw[a]);
  Block blk;
  for (int a = 0; a < Block::kSize; ++a)
    for (int b = 0; b < Block::kSize; ++b)
      for (int d = 0; d < Block::kSize; ++d)
        blk.v[a][b][d] = try_at(c.base[0] - 3 + a, c.base[1] - 3 + b, c.base[2] - 3 + d);
  const double h = geometry_.spacing;
  FieldSample s{0.0, Vec::Zero(3), with_hessian ? Mat::Zero(3, 3) : Mat()};
  for (int a = 2; a < 6; ++a)
    for (int b = 2; b < 6; ++b)
      for (int d = 2; d < 6; ++d) {
        const double wt = w[0][a - 2] * w[1][b - 2] * w[2][d - 2];
        s.u += wt * blk.at(a, b, d);
        for (int axis = 0; axis < 3; ++axis) s.grad(axis) += wt * blk.d1(a, b, d, axis, h);
        if (with_hessian) s.hess += wt * blk.d2(a, b, d, h);
      }
  return s;
}

FieldSample GridField::evaluate(const Vec& x) const { return interpolate(x, true); }

FieldSample GridField::value_and_gradient(const Vec& x) const { return interpolate(x, false); }

std::optional<Box> GridField::level_bounds(double /*t*/) const {
  Box b{Vec(3), Vec(3)};
  for (int a = 0; a < 3; ++a) {
    b.lo(a) = geometry_.origin[a];
    b.hi(a) = geometry_.origin[a] + geometry_.spacing * (geometry_.dims[a] - 1);
  }
  return b;
}

std::optional<Vec> GridField::star_origin() const {
  if (excisions_.empty()) return std::nullopt;
  Vec c = Vec::Zero(3);
  for (const auto& e : excisions_) c += e.center;
  return Vec(c / static_cast<double>(excisions_.size()));
}

double GridField::level_uncertainty() const {
  return geometry_.spacing * geometry_.spacing;
}

std::string GridField::describe() const {
  std::ostringstream os;
  os << "grid(" << geometry_.dims[0] << "x" << geometry_.dims[1] << "x" << geometry_.dims[2]
     << ", h=" << geometry_.spacing << ", m=" << mass_ << ")";
  return os.str();
}

}  // namespace lsg
