#include "lsg/harmonic/critical.hpp"

#include <algorithm>
#include <cmath>

#include "lsg/core/errors.hpp"

namespace lsg {

std::vector<Vec> critical_points(const ScalarField& field, const CriticalSearch& search) {
  const int n = field.dimension();
  if (search.box.lo.size() != n || search.box.hi.size() != n)
    throw DomainError("search box dimension mismatch");
  if (search.seeds_per_axis < 1) throw DomainError("need at least one seed per axis");
  const Vec extent = search.box.extent();
  const double max_step = 0.25 * extent.maxCoeff();

  std::vector<Vec> found;
  const int per = search.seeds_per_axis;
  long total = 1;
  for (int a = 0; a < n; ++a) total *= per;
  for (long s = 0; s < total; ++s) {
    long rem = s;
    Vec x(n);
    for (int a = 0; a < n; ++a) {
      const int idx = static_cast<int>(rem % per);
      rem /= per;
      x(a) = search.box.lo(a) + extent(a) * (idx + 0.5) / per;
    }
    bool ok = false;
    try {
      for (int it = 0; it < search.max_iterations; ++it) {
        const FieldSample fs = field.evaluate(x);
        const double scale = std::max(1.0, fs.hess.norm() * (1.0 + x.norm()));
        if (fs.grad.norm() <= search.gradient_tolerance * scale) {
          ok = true;
          break;
        }
        Vec step = fs.hess.fullPivLu().solve(fs.grad);
        if (!step.allFinite()) break;
        const double len = step.norm();
        if (len > max_step) step *= max_step / len;
        x -= step;
        if (!search.box.contains(x)) break;
        if (len < 1e-15 * (1.0 + x.norm())) {
          ok = field.evaluate(x).grad.norm() <= 1e-8 * scale;
          break;
        }
      }
    } catch (const SingularPointError&) {
      ok = false;
    }
    if (!ok || !search.box.contains(x)) continue;
    const bool dup = std::any_of(found.begin(), found.end(), [&](const Vec& y) {
      return (y - x).norm() < search.dedup_distance;
    });
    if (!dup) found.push_back(x);
  }
  std::sort(found.begin(), found.end(), [](const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
  });
  return found;
}

std::vector<double> critical_values(const ScalarField& field, const CriticalSearch& search) {
  std::vector<double> values;
  for (const Vec& x : critical_points(field, search)) values.push_back(field.value(x));
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace lsg
