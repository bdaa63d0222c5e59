#include "lsg/harmonic/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "lsg/core/errors.hpp"

namespace lsg {

namespace {

enum NodeKind : std::uint8_t { kExcised = 0, kFixed = 1, kRegular = 2, kIrregular = 3 };

// Stencil of a node next to an excision: neighbor weights (zero when the arm is
// cut) and the constant contributed by boundary values.
struct IrregularStencil {
  double coef[6];
  double constant;
  double diag;
};

const Excision* containing(const std::vector<Excision>& ex, const Vec& x) {
  for (const auto& e : ex)
    if ((x - e.center).norm() <= e.radius) return &e;
  return nullptr;
}

// Fraction in (0, 1] along x + s*dir (s in units of h) at which the sphere is hit.
double cut_fraction(const Excision& e, const Vec& x, const Vec& dir, double h) {
  const Vec d = x - e.center;
  const double b = d.dot(dir);
  const double c = d.squaredNorm() - e.radius * e.radius;
  const double disc = b * b - c;
  double s = -b - std::sqrt(std::max(disc, 0.0));
  if (s < 0.0) s = -b + std::sqrt(std::max(disc, 0.0));
  return std::clamp(s / h, 1e-6, 1.0);
}

}  // namespace

GridField solve_dirichlet(const DirichletSpec& spec) {
  const GridGeometry& g = spec.geometry;
  const double h = g.spacing;
  if (!(h > 0.0)) throw DomainError("grid spacing must be positive");
  for (auto d : g.dims)
    if (d < 5) throw DomainError("grid needs at least five nodes per axis");
  if (!(spec.tolerance > 0.0)) throw DomainError("solver tolerance must be positive");
  if (spec.mass < 0.0) throw DomainError("outer mass must be nonnegative");
  Box box{g.node(0, 0, 0), g.node(g.dims[0] - 1, g.dims[1] - 1, g.dims[2] - 1)};
  for (const auto& e : spec.excisions) {
    if (!(e.radius > 0.0)) throw DomainError("excision radius must be positive");
    if (e.center.size() != 3) throw DomainError("excision center must be three-dimensional");
    for (int a = 0; a < 3; ++a) {
      if (e.center(a) - e.radius <= box.lo(a) + 2 * h || e.center(a) + e.radius >= box.hi(a) - 2 * h)
        throw DomainError("excision must lie strictly inside the grid");
    }
  }

  const std::size_t nx = g.dims[0], ny = g.dims[1], nz = g.dims[2];
  std::vector<double> u(g.size(), spec.initial_value);
  std::vector<std::uint8_t> kind(g.size(), kRegular);
  std::vector<std::uint32_t> slot(g.size(), 0);
  std::vector<IrregularStencil> irregular;

  auto outer = [&](const Vec& x) {
    const double r = (x - spec.outer_center).norm();
    return spec.mass == 0.0 ? 1.0 : 1.0 - spec.mass / r;
  };

  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j)
      for (std::size_t k = 0; k < nz; ++k) {
        const std::size_t id = g.index(i, j, k);
        const Vec x = g.node(i, j, k);
        if (i == 0 || j == 0 || k == 0 || i == nx - 1 || j == ny - 1 || k == nz - 1) {
          kind[id] = kFixed;
          u[id] = outer(x);
        } else if (containing(spec.excisions, x)) {
          kind[id] = kExcised;
          u[id] = std::numeric_limits<double>::quiet_NaN();
        }
      }

  // Shortley-Weller coefficients for nodes with an arm crossing an excision.
  const long off[6][3] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  for (std::size_t i = 1; i + 1 < nx; ++i)
    for (std::size_t j = 1; j + 1 < ny; ++j)
      for (std::size_t k = 1; k + 1 < nz; ++k) {
        const std::size_t id = g.index(i, j, k);
        if (kind[id] != kRegular) continue;
        bool cut = false;
        double theta[6];
        const Excision* hit[6] = {};
        const Vec x = g.node(i, j, k);
        for (int a = 0; a < 6; ++a) {
          theta[a] = 1.0;
          const std::size_t nb = g.index(i + off[a][0], j + off[a][1], k + off[a][2]);
          if (kind[nb] == kExcised) {
            Vec dir(3);
            dir << off[a][0], off[a][1], off[a][2];
            hit[a] = containing(spec.excisions, g.node(i + off[a][0], j + off[a][1], k + off[a][2]));
            theta[a] = cut_fraction(*hit[a], x, dir, h);
            cut = true;
          }
        }
        if (!cut) continue;
        IrregularStencil st{};
        for (int axis = 0; axis < 3; ++axis) {
          const double tp = theta[2 * axis], tm = theta[2 * axis + 1];
          const double cp = 2.0 / (tp * (tp + tm)), cm = 2.0 / (tm * (tp + tm));
          st.diag += cp + cm;
          if (hit[2 * axis]) st.constant += cp * hit[2 * axis]->value;
          else st.coef[2 * axis] = cp;
          if (hit[2 * axis + 1]) st.constant += cm * hit[2 * axis + 1]->value;
          else st.coef[2 * axis + 1] = cm;
        }
        kind[id] = kIrregular;
        slot[id] = static_cast<std::uint32_t>(irregular.size());
        irregular.push_back(st);
      }

  const double rho_j = (std::cos(std::numbers::pi / (nx - 1)) + std::cos(std::numbers::pi / (ny - 1)) +
                        std::cos(std::numbers::pi / (nz - 1))) / 3.0;
  const double omega = 2.0 / (1.0 + std::sqrt(1.0 - rho_j * rho_j));
  const std::size_t sx = ny * nz, sy = nz;
  const std::ptrdiff_t strides[6] = {static_cast<std::ptrdiff_t>(sx), -static_cast<std::ptrdiff_t>(sx),
                                     static_cast<std::ptrdiff_t>(sy), -static_cast<std::ptrdiff_t>(sy),
                                     1, -1};

  SolveReport report;
  report.omega = omega;
  for (std::size_t sweep = 1; sweep <= spec.max_sweeps; ++sweep) {
    const bool measure = sweep % 10 == 0;
    double max_corr = 0.0;
    for (int color = 0; color < 2; ++color) {
      for (std::size_t i = 1; i + 1 < nx; ++i)
        for (std::size_t j = 1; j + 1 < ny; ++j) {
          std::size_t k0 = 1 + ((i + j + 1 + color) & 1);
          for (std::size_t k = k0; k + 1 < nz; k += 2) {
            const std::size_t id = (i * ny + j) * nz + k;
            double target;
            if (kind[id] == kRegular) {
              target = (u[id + sx] + u[id - sx] + u[id + sy] + u[id - sy] + u[id + 1] + u[id - 1]) / 6.0;
            } else if (kind[id] == kIrregular) {
              const IrregularStencil& st = irregular[slot[id]];
              double acc = st.constant;
              for (int a = 0; a < 6; ++a)
                if (st.coef[a] != 0.0) acc += st.coef[a] * u[id + strides[a]];
              target = acc / st.diag;
            } else {
              continue;
            }
            const double corr = target - u[id];
            if (measure) max_corr = std::max(max_corr, std::abs(corr));
            u[id] += omega * corr;
          }
        }
    }
    if (measure) {
      report.iterations = sweep;
      report.residual = max_corr;
      if (!std::isfinite(max_corr)) throw NumericalError("grid solver diverged");
      if (max_corr < spec.tolerance) {
        report.converged = true;
        break;
      }
    }
  }
  if (!report.converged) {
    throw NumericalError("grid solver did not converge within the sweep limit (residual " +
                         std::to_string(report.residual) + ")");
  }
  GridField field(g, std::move(u), spec.excisions, spec.mass);
  field.solve_report = report;
  return field;
}

}  // namespace lsg
