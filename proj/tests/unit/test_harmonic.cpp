#include <doctest.h>

#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <sstream>

#include "lsg/core/errors.hpp"
#include "lsg/harmonic/critical.hpp"
#include "lsg/harmonic/grid.hpp"
#include "lsg/harmonic/grid_io.hpp"
#include "lsg/harmonic/multicenter.hpp"

using namespace lsg;
using doctest::Approx;

namespace {

Vec vec3(double x, double y, double z) {
  Vec v(3);
  v << x, y, z;
  return v;
}

Box cube(int n, double half) { return Box{Vec::Constant(n, -half), Vec::Constant(n, half)}; }

double max_node_error(const GridField& f, double m) {
  const GridGeometry& g = f.geometry();
  double err = 0.0;
  for (std::size_t i = 0; i < g.dims[0]; ++i)
    for (std::size_t j = 0; j < g.dims[1]; ++j)
      for (std::size_t k = 0; k < g.dims[2]; ++k)
        if (f.active(i, j, k))
          err = std::max(err, std::abs(f.node_value(i, j, k) - (1.0 - m / g.node(i, j, k).norm())));
  return err;
}

GridField monopole_grid(double h, double m, double radius) {
  DirichletSpec spec;
  spec.geometry = GridGeometry::centered(1.0, h);
  spec.excisions.push_back({Vec::Zero(3), radius, 1.0 - m / radius});
  spec.mass = m;
  spec.tolerance = 1e-12;
  return solve_dirichlet(spec);
}

}  // namespace

TEST_CASE("two-center potential value") {
  const MultiCenterField f = MultiCenterField::two_center(3, 1.0, 1.0);
  CHECK(f.value(vec3(2, 0, 0)) == Approx(1.0 - 0.5 / 1.5 - 0.5 / 2.5).epsilon(1e-15));
  CHECK(f.value(vec3(2, 0, 0)) == Approx(0.466667).epsilon(1e-6));
  CHECK(f.mass() == Approx(1.0));
}

TEST_CASE("multi-center derivatives match centered differences") {
  for (int n = 3; n <= 5; ++n) {
    std::vector<PointCharge> charges;
    Vec a = Vec::Zero(n), b = Vec::Zero(n);
    a(0) = 0.4;
    b(1) = -0.7;
    charges.push_back({a, 0.3});
    charges.push_back({b, 0.8});
    const MultiCenterField f(n, charges);
    Vec x = Vec::Constant(n, 0.35);
    const FieldSample s = f.evaluate(x);
    CHECK(s.u == Approx(f.value(x)).epsilon(1e-15));
    const double h = 1e-5;
    double trace = 0.0;
    for (int i = 0; i < n; ++i) {
      const Vec e = Vec::Unit(n, i) * h;
      CHECK(s.grad(i) == Approx((f.value(x + e) - f.value(x - e)) / (2 * h)).epsilon(1e-8));
      const Vec dg = (f.evaluate(x + e).grad - f.evaluate(x - e).grad) / (2 * h);
      for (int j = 0; j < n; ++j) CHECK(s.hess(i, j) == Approx(dg(j)).epsilon(1e-7));
      trace += s.hess(i, i);
    }
    CHECK(std::abs(trace) < 1e-11 * s.hess.norm());
    CHECK(std::abs(f.flat_laplacian(x)) < 1e-11);
  }
}

TEST_CASE("monopole level radius") {
  const MultiCenterField f3 = MultiCenterField::monopole(3, 2.0);
  CHECK(*f3.level_radius(0.5) == Approx(4.0));
  const MultiCenterField f4 = MultiCenterField::monopole(4, 2.0);
  CHECK(*f4.level_radius(0.5) == Approx(2.0));
  Vec x = Vec::Zero(4);
  x(3) = 2.0;
  CHECK(f4.value(x) == Approx(0.5));
  CHECK_FALSE(MultiCenterField::two_center(3, 1.0, 1.0).level_radius(0.5).has_value());
}

TEST_CASE("evaluation at a center is singular") {
  const MultiCenterField f = MultiCenterField::monopole(3, 1.0);
  CHECK_THROWS_AS(f.evaluate(Vec::Zero(3)), SingularPointError);
  CHECK_THROWS_AS(MultiCenterField(3, {}), DomainError);
}

TEST_CASE("equal charges have their saddle at the midpoint") {
  const MultiCenterField f = MultiCenterField::two_center(3, 1.0, 1.0);
  const auto pts = critical_points(f, CriticalSearch{cube(3, 2.0)});
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].norm() < 1e-10);
  const auto vals = critical_values(f, CriticalSearch{cube(3, 2.0)});
  REQUIRE(vals.size() == 1);
  CHECK(vals[0] == Approx(1.0 - 2.0 * 0.5 / 0.5).epsilon(1e-12));
}

TEST_CASE("unequal charges: saddle located by bracketing the axial gradient") {
  std::vector<PointCharge> charges{{vec3(-1, 0, 0), 1.0}, {vec3(1, 0, 0), 0.25}};
  const MultiCenterField f(3, charges);
  // d/dx of -1/|x+1| - 0.25/|x-1| on (-1, 1).
  auto axial = [](double x) { return 1.0 / ((x + 1) * (x + 1)) - 0.25 / ((1 - x) * (1 - x)); };
  boost::math::tools::eps_tolerance<double> tol(50);
  const auto [lo, hi] = boost::math::tools::bisect(axial, -0.9, 0.9, tol);
  const double x_star = 0.5 * (lo + hi);
  CHECK(x_star == Approx(1.0 / 3.0).epsilon(1e-12));

  const auto pts = critical_points(f, CriticalSearch{cube(3, 3.0)});
  REQUIRE(pts.size() == 1);
  CHECK(pts[0](0) == Approx(x_star).epsilon(1e-10));
  CHECK(std::abs(pts[0](1)) < 1e-10);
  CHECK(std::abs(pts[0](2)) < 1e-10);
}

TEST_CASE("a single charge has no critical points") {
  const MultiCenterField f = MultiCenterField::monopole(3, 1.0);
  CHECK(critical_points(f, CriticalSearch{cube(3, 3.0)}).empty());
}

TEST_CASE("grid geometry") {
  const GridGeometry g = GridGeometry::centered(1.0, 0.25);
  CHECK(g.dims[0] == 9);
  CHECK(g.node(4, 4, 4).norm() < 1e-15);
  CHECK(g.node(8, 0, 4)(0) == Approx(1.0));
  CHECK_THROWS_AS(GridGeometry::centered(1.0, 0.3), DomainError);
}

TEST_CASE("Catmull-Rom interpolation reproduces quadratics") {
  const GridGeometry g = GridGeometry::centered(1.0, 0.125);
  std::vector<double> v(g.size());
  auto q = [](const Vec& x) { return x(0) * x(0) - x(1) * x(1) + 0.5 * x(0) * x(2) + 0.3 * x(1); };
  for (std::size_t i = 0; i < g.dims[0]; ++i)
    for (std::size_t j = 0; j < g.dims[1]; ++j)
      for (std::size_t k = 0; k < g.dims[2]; ++k) v[g.index(i, j, k)] = q(g.node(i, j, k));
  const GridField f(g, v, {}, 0.0);
  const Vec x = vec3(0.137, -0.291, 0.05);
  const FieldSample s = f.evaluate(x);
  CHECK(s.u == Approx(q(x)).epsilon(1e-13));
  CHECK(s.grad(0) == Approx(2 * x(0) + 0.5 * x(2)).epsilon(1e-12));
  CHECK(s.grad(1) == Approx(-2 * x(1) + 0.3).epsilon(1e-12));
  CHECK(s.grad(2) == Approx(0.5 * x(0)).epsilon(1e-12));
  CHECK(s.hess(0, 0) == Approx(2.0).epsilon(1e-10));
  CHECK(s.hess(1, 1) == Approx(-2.0).epsilon(1e-10));
  CHECK(s.hess(0, 2) == Approx(0.5).epsilon(1e-10));
  CHECK(std::abs(s.hess(0, 1)) < 1e-10);
  CHECK(f.value(x) == Approx(q(x)).epsilon(1e-13));
  CHECK_THROWS_AS(f.value(vec3(1.5, 0, 0)), SingularPointError);
}

TEST_CASE("grid solver converges at second order and respects the maximum principle") {
  const double m = 0.5, radius = 0.5;
  const GridField coarse = monopole_grid(1.0 / 8, m, radius);
  const GridField fine = monopole_grid(1.0 / 16, m, radius);
  CHECK(coarse.solve_report.converged);
  CHECK(fine.solve_report.converged);
  const double ec = max_node_error(coarse, m), ef = max_node_error(fine, m);
  CHECK(ef < ec);
  CHECK(std::log2(ec / ef) > 1.5);
  for (double v : fine.values()) {
    if (std::isnan(v)) continue;
    CHECK(v >= 0.0);
    // Largest boundary datum is at the box corners.
    CHECK(v <= 1.0 - m / std::sqrt(3.0) + 1e-12);
  }
  // Nodes inside the excision are inactive.
  const GridGeometry& g = fine.geometry();
  CHECK_FALSE(fine.active(g.dims[0] / 2, g.dims[1] / 2, g.dims[2] / 2));
}

TEST_CASE("constant outer data without excisions gives a constant solution") {
  DirichletSpec spec;
  spec.geometry = GridGeometry::centered(1.0, 0.25);
  spec.mass = 0.0;
  spec.initial_value = 0.3;
  const GridField f = solve_dirichlet(spec);
  for (double v : f.values()) CHECK(v == Approx(1.0).epsilon(1e-9));
}

TEST_CASE("binary grid round trip preserves values and excised nodes") {
  const GridField f = monopole_grid(0.125, 0.5, 0.5);
  std::stringstream buf;
  write_grid_binary(f, buf);
  const GridField g = read_grid_binary(buf, 0.5);
  CHECK(g.geometry().dims == f.geometry().dims);
  CHECK(g.geometry().spacing == f.geometry().spacing);
  CHECK(g.geometry().origin == f.geometry().origin);
  REQUIRE(g.values().size() == f.values().size());
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    if (std::isnan(f.values()[i])) {
      CHECK(std::isnan(g.values()[i]));
    } else {
      CHECK(g.values()[i] == f.values()[i]);
    }
  }
  std::stringstream truncated(buf.str().substr(0, 20));
  CHECK_THROWS(read_grid_binary(truncated, 0.5));
}

TEST_CASE("grid CSV lists active nodes") {
  const GridField f = monopole_grid(0.125, 0.5, 0.5);
  std::ostringstream out;
  write_grid_csv(f, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,y,z,u");
  std::size_t rows = 0, active = 0;
  while (std::getline(in, line)) ++rows;
  for (double v : f.values()) active += !std::isnan(v);
  CHECK(rows == active);
}
