#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lsg/core/config.hpp"
#include "lsg/core/errors.hpp"
#include "lsg/core/metric.hpp"
#include "lsg/core/norms.hpp"
#include "lsg/core/quadrature.hpp"

using namespace lsg;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

double sphere_area_oracle(int n) { return 2.0 * std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n); }

LevelSurface surface_from(const std::vector<double>& grads, const std::vector<double>& weights) {
  LevelSurface s;
  s.dimension = 3;
  for (std::size_t i = 0; i < grads.size(); ++i) {
    SurfaceSample x;
    x.point = Vec::Zero(3);
    x.normal = Vec::Unit(3, 0);
    x.grad_norm = grads[i];
    x.weight = weights[i];
    s.samples.push_back(x);
  }
  return s;
}

// Gamma^k_ij from centered differences of the metric components.
Mat christoffel_fd(const Metric& metric, const Vec& x, int k) {
  const int n = metric.dimension();
  const double h = 1e-5;
  std::vector<Mat> dg(n);
  for (int l = 0; l < n; ++l) {
    Vec e = Vec::Zero(n);
    e[l] = h;
    dg[l] = (metric.at(x + e).g - metric.at(x - e).g) / (2.0 * h);
  }
  const Mat ginv = metric.at(x).ginv;
  Mat out = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        out(i, j) += 0.5 * ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
  return out;
}

}  // namespace

TEST_CASE("StaticConfig validates its invariants") {
  CHECK_NOTHROW(StaticConfig(3, 1.0, 0.0));
  CHECK_THROWS_AS(StaticConfig(2, 1.0), DomainError);
  CHECK_THROWS_AS(StaticConfig(3, 0.0), DomainError);
  CHECK_THROWS_AS(StaticConfig(3, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(StaticConfig(3, 1.0, -0.1), DomainError);
}

TEST_CASE("renormalizing prefactor") {
  const StaticConfig c(3, 1.0);
  CHECK(c.up_exponent(3.0) == Approx(4.0));
  CHECK(c.up_exponent(1.0) == 0.0);
  // (2/(1-0.36))^4 at t = 0.6.
  CHECK(c.up_prefactor(0.6, 3.0) == Approx(std::pow(2.0 / 0.64, 4)).epsilon(1e-14));
  CHECK(c.up_prefactor_from(0.64, 3.0) == Approx(c.up_prefactor(0.6, 3.0)).epsilon(1e-14));
  const StaticConfig c5(5, 2.0);
  CHECK(c5.up_exponent(4.0) == Approx(3.0 * 4.0 / 3.0));
}

TEST_CASE("LevelValue pairs t and s consistently") {
  for (double t : {0.0, 0.3, 0.6, 0.99, 1.0 - 1e-12}) {
    const LevelValue v = LevelValue::from_t(t);
    CHECK(v.s() == Approx(std::log((1.0 + t) / (1.0 - t))).epsilon(1e-12));
    CHECK(LevelValue::from_s(v.s()).t() == Approx(t).epsilon(1e-14));
    CHECK(v.s() >= 0.0);
  }
  const LevelValue near_one = LevelValue::from_s(40.0);
  // 1 - t^2 = sech^2(s/2) without cancellation.
  CHECK(near_one.one_minus_t2() == Approx(1.0 / std::pow(std::cosh(20.0), 2)).epsilon(1e-12));
  CHECK(near_one.one_minus_t2() > 0.0);
  CHECK_NOTHROW(LevelValue::make(0.6, std::log(4.0)));
  CHECK_THROWS(LevelValue::make(0.6, 1.3));
}

TEST_CASE("unit sphere area") {
  CHECK(unit_sphere_area(2) == Approx(2.0 * kPi).epsilon(1e-15));
  CHECK(unit_sphere_area(3) == Approx(4.0 * kPi).epsilon(1e-15));
  CHECK(unit_sphere_area(4) == Approx(2.0 * kPi * kPi).epsilon(1e-15));
  for (int n = 2; n <= 12; ++n) CHECK(unit_sphere_area(n) == Approx(sphere_area_oracle(n)).epsilon(1e-14));
  for (int n = 4; n <= 12; ++n)
    CHECK(unit_sphere_area(n) == Approx(2.0 * kPi * unit_sphere_area(n - 2) / (n - 2)).epsilon(1e-14));
  CHECK_THROWS_AS(unit_sphere_area(1), DomainError);
}

TEST_CASE("Gauss-Legendre integrates polynomials of degree 2N-1 exactly") {
  for (int order : {1, 2, 5, 16, 64}) {
    const auto rule = gauss_legendre(order, 0.0, 1.0);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(order));
    for (int k = 0; k <= 2 * order - 1; ++k) {
      double acc = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * std::pow(rule.nodes[i], k);
      CHECK(acc == Approx(1.0 / (k + 1)).epsilon(1e-13));
    }
  }
  const auto rule = gauss_legendre(24, 0.0, kPi / 2);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * std::cos(rule.nodes[i]);
  CHECK(acc == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("sphere product rule moments") {
  for (int n = 2; n <= 6; ++n) {
    const auto nodes = sphere_rule(n, 16, 32);
    double total = 0.0, second = 0.0, fourth = 0.0;
    Vec first = Vec::Zero(n);
    for (const auto& node : nodes) {
      CHECK(node.direction.norm() == Approx(1.0).epsilon(1e-14));
      total += node.weight;
      first += node.weight * node.direction;
      second += node.weight * node.direction[0] * node.direction[0];
      fourth += node.weight * std::pow(node.direction[n - 1], 4);
    }
    const double area = sphere_area_oracle(n);
    CHECK(total == Approx(area).epsilon(1e-12));
    CHECK(first.norm() < 1e-12);
    // Moments of the uniform measure on S^{n-1}: E[x^2] = 1/n, E[x^4] = 3/(n(n+2)).
    CHECK(second == Approx(area / n).epsilon(1e-11));
    CHECK(fourth == Approx(3.0 * area / (n * (n + 2.0))).epsilon(1e-11));
  }
}

TEST_CASE("averaged L^p norms") {
  const auto s = surface_from({2.0, 2.0, 2.0}, {0.5, 1.0, 1.5});
  auto grad = [](const SurfaceSample& x) { return x.grad_norm; };
  for (double p : {1.0, 2.0, 7.5, kInf}) CHECK(averaged_lp_norm(s, grad, p) == Approx(2.0).epsilon(1e-15));
  const std::vector<double> v{1.0, 3.0}, w{1.0, 1.0};
  CHECK(averaged_lp_norm(v, w, 1.0) == Approx(2.0));
  CHECK(averaged_lp_norm(v, w, 2.0) == Approx(std::sqrt(5.0)));
  CHECK(averaged_lp_norm(v, w, kInf) == 3.0);
  CHECK_THROWS(averaged_lp_norm(v, w, 0.5));
  const std::vector<double> empty;
  CHECK_THROWS(averaged_lp_norm(empty, empty, 2.0));
}

TEST_CASE("averaged L^p norm is nondecreasing in p on random data") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(0.01, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> v(20), w(20);
    for (int i = 0; i < 20; ++i) {
      v[i] = d(rng);
      w[i] = d(rng);
    }
    double prev = 0.0;
    for (double p : {1.0, 1.5, 2.0, 3.0, 8.0, kInf}) {
      const double norm = averaged_lp_norm(v, w, p);
      CHECK(norm >= prev * (1.0 - 1e-14));
      prev = norm;
    }
  }
}

TEST_CASE("K factor") {
  const std::vector<double> w{1.0, 2.0, 3.0};
  CHECK(k_factor(std::vector<double>{0.7, 0.7, 0.7}, w, 3, 3.0) == Approx(1.0).epsilon(1e-15));
  CHECK(k_factor(std::vector<double>{0.7, 0.7, 0.7}, w, 4, 1.0 + 1e-9) == Approx(1.0).epsilon(1e-12));
  const std::vector<double> v{0.5, 1.0, 2.0};
  const double k = k_factor(v, w, 3, 3.0);
  CHECK(k > 0.0);
  CHECK(k < 1.0);
  // Independent evaluation of [|f|_1,0 / |f|_3,0]^{p(n-2)/((p-1)(n-1))}.
  const double l1 = (0.5 * 1 + 1.0 * 2 + 2.0 * 3) / 6.0;
  const double l3 = std::cbrt((0.125 * 1 + 1.0 * 2 + 8.0 * 3) / 6.0);
  CHECK(k == Approx(std::pow(l1 / l3, 3.0 / 4.0)).epsilon(1e-14));
  // Homogeneous of degree zero in |Du|.
  std::vector<double> scaled{5.0, 10.0, 20.0};
  CHECK(k_factor(scaled, w, 3, 3.0) == Approx(k).epsilon(1e-14));
  CHECK_THROWS_AS(k_factor(v, w, 3, 1.0), DomainError);
  CHECK(k_factor(v, w, 3, kInf) == Approx(std::pow(l1 / 2.0, 0.5)).epsilon(1e-14));
}

TEST_CASE("constancy test uses the coefficient of variation") {
  auto grad = [](const SurfaceSample& x) { return x.grad_norm; };
  CHECK(is_constant_over(surface_from({1.0, 1.0 + 1e-12}, {1.0, 1.0}), grad));
  CHECK_FALSE(is_constant_over(surface_from({1.0, 1.0 + 1e-6}, {1.0, 1.0}), grad));
}

TEST_CASE("flat metric") {
  FlatMetric flat(4);
  const auto s = flat.at(Vec::Ones(4));
  CHECK(s.flat);
  CHECK(s.scalar == 0.0);
  CHECK(s.sqrt_det == 1.0);
}

TEST_CASE("conformally flat round-sphere metric has constant curvature") {
  // Stereographic sphere: g = (2/(1+r^2))^2 delta, Ric = (n-1) g.
  for (int n : {3, 4, 5}) {
    RadialFunction w = [](double r) {
      const double q = 1.0 + r * r;
      return RadialValue{std::log(2.0 / q), -2.0 * r / q, (-2.0 * q + 4.0 * r * r) / (q * q)};
    };
    ConformallyFlatRadialMetric metric(n, Vec::Zero(n), w, "sphere");
    Vec x = Vec::Zero(n);
    for (int i = 0; i < n; ++i) x[i] = 0.2 + 0.13 * i;
    const auto s = metric.at(x);
    CHECK(s.scalar == Approx(n * (n - 1.0)).epsilon(1e-12));
    CHECK((s.ricci - (n - 1.0) * s.g).norm() < 1e-11);
    CHECK(s.sqrt_det == Approx(std::pow(2.0 / (1.0 + x.squaredNorm()), n)).epsilon(1e-13));
    for (int k = 0; k < n; ++k) CHECK((s.gamma[k] - christoffel_fd(metric, x, k)).norm() < 1e-8);
  }
}

TEST_CASE("radial profile metric: hemisphere slice") {
  // dr^2/(1-r^2) + r^2 dOmega^2 is the unit round sphere: R = n(n-1).
  for (int n : {3, 4, 5}) {
    RadialFunction f = [](double r) { return RadialValue{1.0 - r * r, -2.0 * r, -2.0}; };
    RadialProfileMetric metric(n, Vec::Zero(n), f, "hemisphere");
    Vec x = Vec::Zero(n);
    for (int i = 0; i < n; ++i) x[i] = 0.1 + 0.07 * i;
    const auto s = metric.at(x);
    CHECK(s.scalar == Approx(n * (n - 1.0)).epsilon(1e-12));
    CHECK((s.ricci - (n - 1.0) * s.g).norm() < 1e-11);
    for (int k = 0; k < n; ++k) CHECK((s.gamma[k] - christoffel_fd(metric, x, k)).norm() < 1e-7);
  }
}
