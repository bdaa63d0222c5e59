#pragma once

#include <Eigen/Dense>

namespace lsg {

// Dimensions never exceed kMaxDim, so vectors and matrices live on the stack.
inline constexpr int kMaxDim = 8;

using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxDim, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxDim, kMaxDim>;

struct Box {
  Vec lo;
  Vec hi;

  Vec center() const { return 0.5 * (lo + hi); }
  Vec extent() const { return hi - lo; }
  bool contains(const Vec& x) const {
    return ((x - lo).array() >= 0.0).all() && ((hi - x).array() >= 0.0).all();
  }
};

}  // namespace lsg
