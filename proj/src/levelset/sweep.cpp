#include "lsg/levelset/sweep.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "lsg/core/errors.hpp"
#include "lsg/levelset/functionals.hpp"

namespace lsg {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double derivative_or_nan(const LevelSurface& surface, const StaticConfig& config, double p) {
  try {
    return up_derivative_formula(surface, config, p);
  } catch (const DomainError&) {
    return kNaN;
  }
}

TableRow compute_row(const ScalarField& field, const StaticConfig& config, double t,
                     std::span<const double> p_list, double delta, const SweepOptions& options) {
  TableRow row;
  const std::size_t np = p_list.size();
  row.up.assign(np, kNaN);
  row.phip.assign(np, kNaN);
  row.dup_formula.assign(np, kNaN);
  row.dup_fd.assign(np, kNaN);
  for (double c : options.critical_values) {
    if (std::abs(t - c) <= 1e-12) {
      row.perturbation = 1e-9;
      break;
    }
  }
  const double level = t + row.perturbation;
  row.t = level;
  row.s = LevelValue::from_t(level).s();
  try {
    const LevelSurface surface = extract(field, level, options.extract);
    const LevelSurface above = extract(field, level + delta, options.extract);
    const LevelSurface below = extract(field, level - delta, options.extract);
    row.excluded_area = surface.excluded_area;
    row.components = surface.components;
    for (std::size_t i = 0; i < np; ++i) {
      const double p = p_list[i];
      row.up[i] = u_p(surface, config, p);
      row.phip[i] = phi_p(surface, config, p);
      row.dup_formula[i] = derivative_or_nan(surface, config, p);
      row.dup_fd[i] = (u_p(above, config, p) - u_p(below, config, p)) / (2.0 * delta);
    }
    if (surface.degenerate) {
      row.ok = false;
      row.error = "degenerate level set";
    }
  } catch (const Error& e) {
    row.ok = false;
    row.error = e.what();
  }
  return row;
}

}  // namespace

FunctionalTable sweep(const ScalarField& field, const StaticConfig& config,
                      std::span<const double> t_grid, std::span<const double> p_list,
                      const SweepOptions& options) {
  if (p_list.empty()) throw DomainError("sweep needs at least one exponent");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > config.u0() && t_grid[i] < 1.0))
      throw DomainError("sweep levels must lie inside (u0, 1)");
    if (i > 0 && !(t_grid[i] > t_grid[i - 1]))
      throw DomainError("sweep levels must be strictly increasing");
  }
  FunctionalTable table;
  table.p_values.assign(p_list.begin(), p_list.end());
  table.fd_step = options.fd_step > 0.0 ? options.fd_step
                                        : std::max(1e-4, 10.0 * field.level_uncertainty());
  table.rows.resize(t_grid.size());

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(t_grid.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < t_grid.size(); i = next++) {
      table.rows[i] = compute_row(field, config, t_grid[i], p_list, table.fd_step, options);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  return table;
}

bool FunctionalTable::all_finite() const {
  auto finite = [](const std::vector<double>& v) {
    for (double x : v)
      if (!std::isfinite(x)) return false;
    return true;
  };
  for (const auto& r : rows) {
    if (!r.ok || !std::isfinite(r.t) || !std::isfinite(r.s) || !std::isfinite(r.excluded_area))
      return false;
    if (!finite(r.up) || !finite(r.phip) || !finite(r.dup_formula) || !finite(r.dup_fd))
      return false;
  }
  return true;
}

std::vector<double> make_t_grid(double t_min, double t_max, int count, bool tanh_uniform) {
  if (count < 1) throw DomainError("level grid needs at least one point");
  if (!(t_min > -1.0 && t_max < 1.0 && t_min <= t_max)) throw DomainError("invalid level range");
  if (count > 1 && !(t_min < t_max)) throw DomainError("level range is empty");
  std::vector<double> grid(count);
  if (count == 1) {
    grid[0] = t_min;
    return grid;
  }
  if (!tanh_uniform) {
    for (int i = 0; i < count; ++i)
      grid[i] = (i == count - 1) ? t_max : t_min + (t_max - t_min) * i / (count - 1);
    return grid;
  }
  const double s0 = LevelValue::from_t(t_min).s(), s1 = LevelValue::from_t(t_max).s();
  for (int i = 0; i < count; ++i) {
    grid[i] = (i == 0) ? t_min : (i == count - 1) ? t_max
                                                  : LevelValue::from_s(s0 + (s1 - s0) * i / (count - 1)).t();
  }
  return grid;
}

}  // namespace lsg
