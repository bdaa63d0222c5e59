#include "lsg/core/field.hpp"

#include <limits>

namespace lsg {

double ScalarField::flat_laplacian(const Vec& x) const {
  if (!metric().is_flat()) return std::numeric_limits<double>::quiet_NaN();
  return evaluate(x).hess.trace();
}

}  // namespace lsg
