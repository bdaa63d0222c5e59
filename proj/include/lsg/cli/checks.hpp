#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lsg/inequalities/report.hpp"

namespace lsg::cli {

/// One line of a suite: passes when value <= bound (or >= bound for at_least).
struct CheckRow {
  std::string suite;
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool at_least = false;
  bool passed = false;
  std::string detail;
};

struct SuiteOptions {
  /// Multiplies the right-hand side of every comparison; 1 for genuine checks.
  double rhs_scale = 1.0;
  Tolerances tolerances;
  unsigned threads = 0;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs a predefined suite ("all" runs every suite in order).
std::vector<CheckRow> run_suite(const std::string& name, const SuiteOptions& options = {});

void print_check_table(const std::vector<CheckRow>& rows, std::ostream& out);

/// Runs a suite and prints its table: exit 0 iff every row passes, 4 otherwise,
/// 3 on a numerical failure.
int check(const std::string& suite, const SuiteOptions& options, std::ostream& out);

}  // namespace lsg::cli
