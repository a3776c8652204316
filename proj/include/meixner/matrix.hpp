// Dense Eigen matrices over the exact scalar.
#pragma once

#include "meixner/rational.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace meixner {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Exact zero test; Eigen's isZero() is tolerance based.
template <typename Derived>
bool exactly_zero(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != Scalar(0)) return false;
  return true;
}

}  // namespace meixner
