// Acceptance criteria 1-11. Each criterion prints one PASS/FAIL line with the
// worst observed error; the exit status is nonzero if any criterion fails.
//
// Usage: acceptance <path to lsg> [criterion numbers...]

#include <fmt/core.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <mutex>
#include <numbers>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "lsg/conformal/conformal.hpp"
#include "lsg/core/errors.hpp"
#include "lsg/harmonic/grid.hpp"
#include "lsg/harmonic/multicenter.hpp"
#include "lsg/inequalities/inequalities.hpp"
#include "lsg/levelset/extract.hpp"
#include "lsg/levelset/functionals.hpp"
#include "lsg/levelset/sweep.hpp"
#include "lsg/schwarzschild/field.hpp"

namespace fs = std::filesystem;
using namespace lsg;

namespace {

constexpr double kPi = std::numbers::pi;

std::string g_lsg_path;

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Largest error seen so far and where it occurred.
struct Worst {
  double value = 0.0;
  std::string where = "-";
  void update(double err, const std::string& at) {
    if (!(err <= value)) {  // NaN always wins
      value = err;
      where = at;
    }
  }
  bool within(double bound) const { return value <= bound; }
  std::string str() const { return fmt::format("{:.2e} at {}", value, where); }
};

double sphere_area(int n) { return 2.0 * std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n); }

double up_oracle(int n, double m, double p) { return std::pow(m * (n - 2), p) * sphere_area(n); }

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::vector<double> t_grid19() { return make_t_grid(0.05, 0.95, 19, false); }

ExtractOptions backend(Backend b, int resolution = 128) {
  ExtractOptions o;
  o.backend = b;
  o.resolution = resolution;
  return o;
}

LevelSurface schwarzschild_surface(int n, double m, double t) {
  return extract(SchwarzschildField(SchwarzschildModel(n, m)), t, backend(Backend::Radial));
}

/// Runs jobs on all hardware threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& job) {
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), count));
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) job(i);
    });
}

// 1. U_p constancy on Schwarzschild.
Outcome criterion1() {
  Worst radial, tri;
  const auto ts = t_grid19();
  const double ps[] = {1.0, 3.0, 4.0};
  for (int n : {3, 4, 5})
    for (double m : {0.5, 1.0, 2.0}) {
      const StaticConfig config(n, m);
      for (double t : ts) {
        const LevelSurface s = schwarzschild_surface(n, m, t);
        for (double p : ps)
          radial.update(rel(u_p(s, config, p), up_oracle(n, m, p)), fmt::format("n={} m={} p={} t={:.2f}", n, m, p, t));
      }
    }
  std::mutex mu;
  const double ms[] = {0.5, 1.0, 2.0};
  parallel_for(3 * ts.size(), [&](std::size_t i) {
    const double m = ms[i / ts.size()], t = ts[i % ts.size()];
    const SchwarzschildField field(SchwarzschildModel(3, m));
    const LevelSurface s = extract(field, t, backend(Backend::Triangulation, 128));
    const StaticConfig config(3, m);
    for (double p : ps) {
      const double e = rel(u_p(s, config, p), up_oracle(3, m, p));
      std::lock_guard lock(mu);
      tri.update(e, fmt::format("m={} p={} t={:.2f}", m, p, t));
    }
  });
  return {radial.within(1e-6) && tri.within(1e-3),
          fmt::format("radial {} (<= 1e-6); triangulation 128^3 {} (<= 1e-3)", radial.str(), tri.str())};
}

// 2. U_1 equals m (n-2) |S^{n-1}|.
Outcome criterion2() {
  Worst sch, mono, grid;
  for (int n : {3, 4, 5})
    for (double m : {0.5, 1.0, 2.0}) {
      const StaticConfig config(n, m);
      const MultiCenterField monopole = MultiCenterField::monopole(n, m);
      for (double t : t_grid19()) {
        const std::string at = fmt::format("n={} m={} t={:.2f}", n, m, t);
        sch.update(rel(u_p(schwarzschild_surface(n, m, t), config, 1.0), up_oracle(n, m, 1.0)), at);
        mono.update(rel(u_p(extract(monopole, t, backend(Backend::Radial)), config, 1.0), up_oracle(n, m, 1.0)), at);
      }
    }
  // Monopole exterior to |x| = 1 with u = 0 there, on [-2, 2]^3 at h = 1/32.
  DirichletSpec spec;
  spec.geometry = GridGeometry::centered(2.0, 1.0 / 32.0);
  spec.excisions.push_back({Vec::Zero(3), 1.0, 0.0});
  spec.mass = 1.0;
  spec.tolerance = 1e-10;
  const GridField field = solve_dirichlet(spec);
  const StaticConfig config(3, 1.0);
  for (double t : {0.3, 0.4}) {
    const LevelSurface s = extract(field, t, backend(Backend::Triangulation));
    grid.update(rel(u_p(s, config, 1.0), 4.0 * kPi), fmt::format("t={}", t));
  }
  return {sch.within(1e-8) && mono.within(1e-8) && grid.within(1e-4) && field.solve_report.converged,
          fmt::format("Schwarzschild {}; monopole {}; grid h=1/32 {} (<= 1e-4)", sch.str(), mono.str(), grid.str())};
}

// 3. Derivative formulas.
Outcome criterion3() {
  Worst closed, quad, two;
  for (int n : {3, 4, 5})
    for (double m : {0.5, 1.0})
      for (double p : {2.0, 3.0, 4.0})
        for (double t : {0.2, 0.5, 0.8}) {
          // r^{n-2} = m/(1-t); |Du| = (n-2) m r^{1-n}; H = (n-1)/r.
          const double r = std::pow(m / (1.0 - t), 1.0 / (n - 2));
          const double g = (n - 2) * m * std::pow(r, 1.0 - n);
          const double area = sphere_area(n) * std::pow(r, n - 1);
          const double w = area * std::pow(g, p);
          const double dw_chain = w * (n - 1) * (1.0 - p) / ((n - 2) * (1.0 - t));
          const double dw_formula = -(p - 1) * area * std::pow(g, p - 1) * (n - 1) / r;
          const std::string at = fmt::format("n={} m={} p={} t={}", n, m, p, t);
          closed.update(rel(dw_formula, dw_chain), at);
          const LevelSurface s = extract(MultiCenterField::monopole(n, m), t, backend(Backend::Radial));
          quad.update(rel(wp_derivative_formula(s, p), dw_chain), at);
        }
  const double example =
      wp_derivative_formula(extract(MultiCenterField::monopole(3, 1.0), 0.5, backend(Backend::Radial)), 3.0);
  quad.update(rel(example, -2.0 * kPi), "n=3 m=1 p=3 t=0.5 (-2 pi)");

  const MultiCenterField f = MultiCenterField::two_center(3, 1.0, 1.0);
  const StaticConfig config(3, 1.0);
  ExtractOptions star = backend(Backend::Star);
  star.polar_order = 48;
  const double h = 1e-4;
  for (double p : {3.0, 4.0})
    for (double t : {0.2, 0.5, 0.8}) {
      const double formula = up_derivative_formula(f, config, t, p, star);
      const double fd = (u_p(f, config, t + h, p, star) - u_p(f, config, t - h, p, star)) / (2 * h);
      two.update(rel(formula, fd), fmt::format("p={} t={}", p, t));
    }
  return {closed.within(1e-13) && quad.within(1e-8) && two.within(1e-3),
          fmt::format("closed form {}; monopole quadrature {}; two-center vs FD {}", closed.str(), quad.str(), two.str())};
}

// 4. Rigidity residuals vanish on Schwarzschild.
Outcome criterion4() {
  Worst interior, boundary, first, second, hg;
  for (int n : {3, 4, 5})
    for (double m : {0.5, 1.0, 2.0}) {
      const StaticConfig config(n, m);
      for (double t : t_grid19()) {
        const LevelSurface s = schwarzschild_surface(n, m, t);
        const std::string at = fmt::format("n={} m={} t={:.2f}", n, m, t);
        interior.update(overdetermined_residuals(s, config).interior.lhs, at);
        for (double p : {3.0, 4.0})
          first.update(std::abs(up_derivative_formula(s, config, p)) / up_oracle(n, m, p), at);
        for (const auto& x : s.samples) {
          conformal::PointData d;
          d.u = x.u;
          d.grad_norm = x.grad_norm;
          d.one_minus_u2 = x.one_minus_u2;
          hg.update(std::abs(conformal::mean_curvature_g(x.mean_curvature, d, n)) / conformal::gradient_norm_g(d, n), at);
        }
      }
      const LevelSurface h = schwarzschild_surface(n, m, 0.0);
      const std::string at = fmt::format("n={} m={} t=0", n, m);
      boundary.update(overdetermined_residuals(h, config).boundary.lhs, at);
      for (double p : {3.0, 4.0, 5.5})
        second.update(std::abs(boundary_second_derivative(h, config, p)) / up_oracle(n, m, p), at);
    }
  const bool ok = interior.within(1e-8) && boundary.within(1e-8) && first.within(1e-8) &&
                  second.within(1e-8) && hg.within(1e-8);
  return {ok, fmt::format("interior {}; boundary {}; U_p' {}; U_p''(0) {}; H_g {}", interior.str(), boundary.str(),
                          first.str(), second.str(), hg.str())};
}

// 5. Mass sandwich and Penrose equality.
Outcome criterion5() {
  Worst sandwich, penrose;
  for (int n : {3, 4, 5})
    for (double m : {0.5, 1.0, 2.0}) {
      const StaticConfig config(n, m);
      for (double p : {3.0, 4.0})
        for (double t : {0.3, 0.6, 0.9}) {
          const MassSandwich ms = mass_sandwich(schwarzschild_surface(n, m, t), config, p);
          const std::string at = fmt::format("n={} m={} p={} t={}", n, m, p, t);
          sandwich.update(rel(ms.lower, m), at + " lower");
          sandwich.update(rel(ms.upper, m), at + " upper");
        }
      const LevelSurface h = schwarzschild_surface(n, m, 0.0);
      const double bound = 0.5 * std::pow(h.area() / sphere_area(n), (n - 2.0) / (n - 1.0));
      penrose.update(rel(bound, m), fmt::format("n={} m={}", n, m));
    }
  return {sandwich.within(1e-8) && penrose.within(1e-10),
          fmt::format("sandwich {} (<= 1e-8); Penrose {} (<= 1e-10)", sandwich.str(), penrose.str())};
}

// 6. Willmore-type inequalities.
Outcome criterion6() {
  Worst stat, flat;
  for (double m : {0.5, 1.0, 2.0})
    for (double t : {0.2, 0.5, 0.8}) {
      const InequalityReport r = willmore(schwarzschild_surface(4, m, t), StaticConfig(4, m), WillmoreMode::Static);
      stat.update(std::abs(r.slack) / r.rhs, fmt::format("m={} t={}", m, t));
    }
  for (int n : {3, 4, 5})
    for (double t : {0.0, 0.5}) {
      const LevelSurface s = extract(MultiCenterField::monopole(n, 1.0), t, backend(Backend::Radial));
      const InequalityReport r = willmore(s, StaticConfig(n, 1.0), WillmoreMode::Flat);
      // On any round sphere both sides equal |S^{n-1}|^{1/(n-1)}.
      const double exact = std::pow(sphere_area(n), 1.0 / (n - 1));
      flat.update(std::max(rel(r.lhs, exact), rel(r.rhs, exact)), fmt::format("n={} t={}", n, t));
    }
  ExtractOptions star = backend(Backend::Star);
  star.polar_order = 48;
  const LevelSurface peanut = extract(MultiCenterField::two_center(3, 1.0, 1.0), 0.0, star);
  const InequalityReport strict = willmore(peanut, StaticConfig(3, 1.0), WillmoreMode::Flat);
  return {stat.within(1e-8) && flat.within(1e-8) && strict.slack > 1e-3,
          fmt::format("static {}; round spheres {}; two-center slack {:.4f} (> 1e-3)", stat.str(), flat.str(),
                      strict.slack)};
}

// 7. Conformal dictionary.
Outcome criterion7() {
  Worst phi, conv, limit;
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> du(-0.999, 0.999), dv(0.1, 50.0), dp(1.0, 6.0);
  for (int i = 0; i < 10000; ++i) {
    const double u = du(rng);
    phi.update(std::abs(conformal::from_phi(conformal::to_phi(u)) - u) / std::max(std::abs(u), 1e-3),
               fmt::format("u={}", u));
    const StaticConfig config(3 + i % 4, 0.25 + (i % 7) * 0.3);
    const double v = dv(rng), p = dp(rng);
    conv.update(rel(conformal::phi_p_from_up(conformal::up_from_phi_p(v, p, config), p, config), v),
                fmt::format("p={}", p));
    conv.update(rel(conformal::up_from_phi_p(conformal::phi_p_from_up(v, p, config), p, config), v),
                fmt::format("p={}", p));
  }
  for (int n : {3, 4, 5})
    for (double m : {0.5, 1.0, 2.0}) {
      const StaticConfig config(n, m);
      for (double t : t_grid19()) {
        const LevelSurface s = schwarzschild_surface(n, m, t);
        for (double p : {1.0, 3.0, 4.0}) {
          const double exact = std::pow(2.0 * m, (n - 1.0 - p) / (n - 2.0)) * std::pow(n - 2.0, p) * sphere_area(n);
          limit.update(rel(phi_p(s, config, p), exact), fmt::format("n={} m={} p={} t={:.2f}", n, m, p, t));
        }
      }
    }
  return {phi.within(1e-14) && conv.within(1e-12) && limit.within(1e-8),
          fmt::format("phi round trip {}; U_p/Phi_p {}; Phi_p limits {}", phi.str(), conv.str(), limit.str())};
}

// 8. Divergence identity on the cylinder.
Outcome criterion8() {
  Worst res;
  for (int n : {3, 4, 5})
    for (double m : {0.5, 1.0})
      for (double p : {1.0, 3.0})
        for (double s : {0.5, 1.0, 2.0}) {
          const auto r = conformal::cylinder_identity_check(SchwarzschildModel(n, m), s, p);
          res.update(std::abs(r.lhs - r.rhs) / std::abs(r.lhs), fmt::format("n={} m={} p={} s={}", n, m, p, s));
        }
  return {res.within(1e-8), fmt::format("relative residual {}", res.str())};
}

// 9. Refined Kato inequality.
Outcome criterion9() {
  Worst worst;
  double min_defect = std::numeric_limits<double>::infinity();
  std::string where;
  auto sample = [&](const MultiCenterField& f, const std::string& label) {
    const int n = f.dimension();
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    int taken = 0;
    while (taken < 10000) {
      Vec x(n);
      for (int k = 0; k < n; ++k) x(k) = d(rng);
      if (f.distance_to_centers(x) < 0.5) continue;
      const FieldSample s = f.evaluate(x);
      const double g2 = s.grad.squaredNorm();
      if (g2 == 0.0) continue;
      ++taken;
      const double defect = s.hess.squaredNorm() - (n / (n - 1.0)) * (s.hess * s.grad).squaredNorm() / g2;
      if (defect < min_defect) {
        min_defect = defect;
        where = label;
      }
    }
  };
  sample(MultiCenterField::monopole(3, 1.0), "monopole n=3");
  sample(MultiCenterField::two_center(3, 1.0, 1.0), "two-center n=3");
  sample(MultiCenterField::two_center(4, 1.0, 1.0), "two-center n=4");
  return {min_defect >= -1e-10, fmt::format("min defect {:.3e} ({}) over 3 x 10^4 samples", min_defect, where)};
}

// 10. Grid solver convergence and maximum principle.
Outcome criterion10() {
  const double m = 0.5, radius = 0.5, half = 1.0;
  std::vector<double> hs, errs;
  bool maxp = true;
  std::string detail;
  for (double h : {1.0 / 16, 1.0 / 32, 1.0 / 64}) {
    DirichletSpec spec;
    spec.geometry = GridGeometry::centered(half, h);
    spec.excisions.push_back({Vec::Zero(3), radius, 1.0 - m / radius});
    spec.mass = m;
    spec.tolerance = 1e-12;
    const GridField f = solve_dirichlet(spec);
    const GridGeometry& g = f.geometry();
    double err = 0.0, lo = 1.0 - m / radius, hi = 1.0 - m / radius;
    const std::size_t last = g.dims[0] - 1;
    auto on_face = [&](std::size_t i, std::size_t j, std::size_t k) {
      return i == 0 || j == 0 || k == 0 || i == last || j == last || k == last;
    };
    for (std::size_t i = 0; i <= last; ++i)
      for (std::size_t j = 0; j <= last; ++j)
        for (std::size_t k = 0; k <= last; ++k)
          if (on_face(i, j, k)) {
            lo = std::min(lo, f.node_value(i, j, k));
            hi = std::max(hi, f.node_value(i, j, k));
          }
    for (std::size_t i = 1; i < last; ++i)
      for (std::size_t j = 1; j < last; ++j)
        for (std::size_t k = 1; k < last; ++k) {
          if (!f.active(i, j, k)) continue;
          const double v = f.node_value(i, j, k);
          err = std::max(err, std::abs(v - (1.0 - m / g.node(i, j, k).norm())));
          if (!(v > lo && v < hi)) maxp = false;
        }
    hs.push_back(h);
    errs.push_back(err);
    detail += fmt::format("h=1/{:.0f}: {:.3e}; ", 1.0 / h, err);
  }
  // Least-squares slope of log(err) against log(h).
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    mx += std::log(hs[i]) / hs.size();
    my += std::log(errs[i]) / hs.size();
  }
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    sxy += (std::log(hs[i]) - mx) * (std::log(errs[i]) - my);
    sxx += (std::log(hs[i]) - mx) * (std::log(hs[i]) - mx);
  }
  const double order = sxy / sxx;
  return {order >= 1.8 && order <= 2.2 && maxp,
          detail + fmt::format("order {:.3f} in [1.8, 2.2]; maximum principle {}", order, maxp ? "holds" : "violated")};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// 11. Two runs of the same config give identical artifacts.
Outcome criterion11() {
  if (g_lsg_path.empty()) return {false, "path to the lsg executable not given"};
  const fs::path root = fs::temp_directory_path() / "lsg-acceptance-determinism";
  fs::remove_all(root);
  std::vector<std::string> mismatches;
  int compared = 0;
  for (const char* name : {"schwarzschild.ini", "two_center.ini"}) {
    const fs::path config = fs::path(LSG_CONFIG_DIR) / name;
    for (const char* run : {"a", "b"}) {
      const fs::path out = root / name / run;
      const std::string cmd = fmt::format("\"{}\" --out-dir \"{}\" run \"{}\" > /dev/null 2>&1", g_lsg_path,
                                          out.string(), config.string());
      if (std::system(cmd.c_str()) != 0) return {false, fmt::format("lsg run {} failed", name)};
    }
    for (const char* file : {"table.csv", "table.json", "reports.json", "reports.txt", "manifest.json"}) {
      const std::string a = slurp(root / name / "a" / file), b = slurp(root / name / "b" / file);
      ++compared;
      if (a.empty() || a != b) mismatches.push_back(fmt::format("{}/{}", name, file));
    }
  }
  fs::remove_all(root);
  std::string detail = fmt::format("{} artifacts compared", compared);
  for (const auto& m : mismatches) detail += "; differs: " + m;
  return {mismatches.empty(), detail};
}

struct Criterion {
  int id;
  const char* title;
  Outcome (*run)();
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_lsg_path = argv[1];
  std::vector<int> only;
  for (int i = 2; i < argc; ++i) only.push_back(std::atoi(argv[i]));

  const Criterion criteria[] = {
      {1, "Schwarzschild constancy of U_p", criterion1},
      {2, "U_1 mass identity", criterion2},
      {3, "derivative formula", criterion3},
      {4, "rigidity residuals on Schwarzschild", criterion4},
      {5, "mass sandwich collapse and Penrose equality", criterion5},
      {6, "Willmore-type inequalities", criterion6},
      {7, "conformal dictionary", criterion7},
      {8, "cylinder integral identity", criterion8},
      {9, "refined Kato inequality", criterion9},
      {10, "grid solver convergence and maximum principle", criterion10},
      {11, "determinism of artifacts", criterion11},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    fmt::print("[{}] criterion {}: {} -- {} ({:.1f} s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail, secs);
    std::fflush(stdout);
  }
  fmt::print("{} criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
