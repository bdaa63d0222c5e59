#pragma once

#include <vector>

#include "lsg/core/field.hpp"

namespace lsg {

struct CriticalSearch {
  Box box;
  int seeds_per_axis = 7;
  int max_iterations = 60;
  /// Points closer than this are merged.
  double dedup_distance = 1e-6;
  double gradient_tolerance = 1e-12;
};

/// Zeros of the chart gradient found by Newton iteration from a seed lattice.
std::vector<Vec> critical_points(const ScalarField& field, const CriticalSearch& search);

/// Values of the field at its critical points inside the box, sorted.
std::vector<double> critical_values(const ScalarField& field, const CriticalSearch& search);

}  // namespace lsg
