// Truncated operators on span{f_0..f_N} that track which input degrees are
// still exact after truncation.
#pragma once

#include "meixner/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace meixner {

/// Range of grade shifts m - n for which entries(m, n) may be nonzero.
struct Band {
  int lo = 0;
  int hi = 0;
  friend bool operator==(const Band&, const Band&) = default;
};

/// entries(m, n) is the f_m coordinate of A f_n. Columns n > N - margin are
/// unreliable because part of A f_n fell outside the truncation. A `closed`
/// operator lives on a space that is invariant under X (finite support), so
/// nothing is ever dropped.
template <typename Scalar>
class GradedOperator {
 public:
  GradedOperator(Matrix<Scalar> entries, Band band, std::size_t margin, bool closed = false)
      : entries_(std::move(entries)), band_(band), margin_(margin), closed_(closed) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
      throw std::invalid_argument("graded operator needs a non-empty square matrix");
    }
    const auto up = std::min(static_cast<std::size_t>(std::max(band_.hi, 0)), truncation() + 1);
    if (!closed_ && margin_ < up) {
      throw std::invalid_argument("margin smaller than the upward band of an open truncation");
    }
    for (Eigen::Index n = 0; n < entries_.cols(); ++n)
      for (Eigen::Index m = 0; m < entries_.rows(); ++m) {
        const auto shift = static_cast<int>(m - n);
        if ((shift < band_.lo || shift > band_.hi) && entries_(m, n) != Scalar(0)) {
          throw std::invalid_argument("entry (" + std::to_string(m) + "," + std::to_string(n) +
                                      ") lies outside the declared band");
        }
      }
  }

  std::size_t truncation() const { return static_cast<std::size_t>(entries_.rows() - 1); }
  const Matrix<Scalar>& entries() const { return entries_; }
  const Scalar& operator()(std::size_t m, std::size_t n) const {
    return entries_(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  }
  Band band() const { return band_; }
  std::size_t margin() const { return margin_; }
  bool closed() const { return closed_; }

  /// Largest input degree with an exact image, or -1 if there is none.
  long valid_degree() const { return static_cast<long>(truncation()) - static_cast<long>(margin_); }

 private:
  Matrix<Scalar> entries_;
  Band band_;
  std::size_t margin_;
  bool closed_;
};

namespace detail {
template <typename Scalar>
void require_same_truncation(const GradedOperator<Scalar>& a, const GradedOperator<Scalar>& b) {
  if (a.truncation() != b.truncation()) throw std::invalid_argument("graded operators with different truncations");
}
}  // namespace detail

template <typename Scalar>
GradedOperator<Scalar> operator+(const GradedOperator<Scalar>& a, const GradedOperator<Scalar>& b) {
  detail::require_same_truncation(a, b);
  return {a.entries() + b.entries(), Band{std::min(a.band().lo, b.band().lo), std::max(a.band().hi, b.band().hi)},
          std::max(a.margin(), b.margin()), a.closed() && b.closed()};
}

template <typename Scalar>
GradedOperator<Scalar> operator-(const GradedOperator<Scalar>& a, const GradedOperator<Scalar>& b) {
  detail::require_same_truncation(a, b);
  return {a.entries() - b.entries(), Band{std::min(a.band().lo, b.band().lo), std::max(a.band().hi, b.band().hi)},
          std::max(a.margin(), b.margin()), a.closed() && b.closed()};
}

template <typename Scalar>
GradedOperator<Scalar> operator*(const Scalar& s, const GradedOperator<Scalar>& a) {
  return {s * a.entries(), a.band(), a.margin(), a.closed()};
}

/// Composition a∘b. Column n of the product is exact when b f_n is exact and
/// every grade it reaches is an exact input of a. Two closed operators
/// compose exactly.
template <typename Scalar>
GradedOperator<Scalar> operator*(const GradedOperator<Scalar>& a, const GradedOperator<Scalar>& b) {
  detail::require_same_truncation(a, b);
  const Band band{a.band().lo + b.band().lo, a.band().hi + b.band().hi};
  const bool closed = a.closed() && b.closed();
  std::size_t margin = 0;
  if (!closed) {
    margin = std::max(b.margin(), a.margin() + static_cast<std::size_t>(std::max(b.band().hi, 0)));
    margin = std::max(margin, static_cast<std::size_t>(std::max(band.hi, 0)));
    margin = std::min(margin, a.truncation() + 1);
  }
  return {a.entries() * b.entries(), band, margin, closed};
}

/// [A, B] = AB - BA
template <typename Scalar>
GradedOperator<Scalar> commutator(const GradedOperator<Scalar>& a, const GradedOperator<Scalar>& b) {
  return a * b - b * a;
}

/// Applies the operator to a coordinate vector in the f-basis.
template <typename Scalar>
Vector<Scalar> apply(const GradedOperator<Scalar>& a, const Vector<Scalar>& coords) {
  return a.entries() * coords;
}

}  // namespace meixner
