#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "lsg/core/config.hpp"
#include "lsg/core/field.hpp"
#include "lsg/levelset/extract.hpp"

namespace lsg {

struct SweepOptions {
  ExtractOptions extract;
  /// Centered-difference step; 0 selects max(1e-4, 10 * field.level_uncertainty()).
  double fd_step = 0.0;
  /// Levels within 1e-12 of one of these are shifted by +1e-9.
  std::vector<double> critical_values;
  /// Worker threads; 0 uses the hardware concurrency.
  unsigned threads = 0;
};

struct TableRow {
  double t = 0.0;
  double s = 0.0;
  std::vector<double> up;
  std::vector<double> phip;
  std::vector<double> dup_formula;
  std::vector<double> dup_fd;
  double excluded_area = 0.0;
  double perturbation = 0.0;
  int components = 0;
  bool ok = true;
  std::string error;
};

struct FunctionalTable {
  std::vector<double> p_values;
  double fd_step = 0.0;
  std::vector<TableRow> rows;

  bool all_finite() const;
  std::vector<std::string> column_names() const;
};

/// Evaluates U_p, Phi_p and both derivative estimates on every level of the grid.
/// A failing row is marked and left NaN; the sweep continues.
FunctionalTable sweep(const ScalarField& field, const StaticConfig& config,
                      std::span<const double> t_grid, std::span<const double> p_list,
                      const SweepOptions& options = {});

/// Levels min..max, linear in t or uniform in s = log((1+t)/(1-t)).
std::vector<double> make_t_grid(double t_min, double t_max, int count, bool tanh_uniform);

void write_table_csv(const FunctionalTable& table, std::ostream& out);
nlohmann::ordered_json table_to_json(const FunctionalTable& table);

/// Column label for an exponent, e.g. 3 -> "3", 2.5 -> "2.5".
std::string format_exponent(double p);

}  // namespace lsg
