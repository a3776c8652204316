// Monic orthogonal polynomials, moments, and the inverse (moments -> recurrence)
// construction.
#pragma once

#include "meixner/matrix.hpp"
#include "meixner/polynomial.hpp"
#include "meixner/rational.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace meixner {

/// Recurrence data for X f_n = f_{n+1} + alpha_n f_n + omega_n f_{n-1}.
///
/// alpha(n) is queried for n >= 0 and omega(n) for n >= 1. When the measure
/// has finite support, support_bound holds the first n with omega_n == 0; the
/// chaos spaces G_n vanish from that index on.
struct SzegoJacobi {
  std::function<Rat(std::size_t)> alpha;
  std::function<Rat(std::size_t)> omega;
  std::optional<std::size_t> support_bound;

  /// Finite tables; alpha[n] = alpha_n, omega[n] = omega_n (omega[0] unused).
  /// Queries past the end of a table throw std::out_of_range.
  static SzegoJacobi from_tables(std::vector<Rat> alpha, std::vector<Rat> omega,
                                 std::optional<std::size_t> support_bound = std::nullopt);

  /// Number of basis polynomials f_0..f_{d-1} that are nonzero in L^2, capped
  /// at `cap`.
  std::size_t dimension(std::size_t cap) const;

  /// True when span{f_0..f_N} is invariant under X (finite support reached).
  bool closed_at(std::size_t N) const { return support_bound && *support_bound == N + 1; }
};

/// Raw moments, moments[m] = E[X^m], moments[0] == 1.
struct MomentSeq {
  std::vector<Rat> moments;

  std::size_t size() const { return moments.size(); }
  const Rat& operator[](std::size_t m) const { return moments[m]; }
  friend bool operator==(const MomentSeq&, const MomentSeq&) = default;
};

/// f_0..f_N. Throws TruncationBeyondSupport if N >= support_bound.
std::vector<Poly> monic_polys(const SzegoJacobi& sj, std::size_t N);

/// The (n x n) monic Jacobi matrix in the f-basis: column j holds the
/// coordinates of X f_j, so (J^m)(0,0) = E[X^m].
Matrix<Rat> jacobi_matrix(const SzegoJacobi& sj, std::size_t n);

/// E[X^0..X^M] as the top-left entries of powers of the Jacobi matrix.
MomentSeq moments_from_sj(const SzegoJacobi& sj, std::size_t M);

/// Applies the moment functional L(X^i) = moments[i] to f.
/// Throws std::out_of_range if deg f exceeds the available moments.
Rat moment_functional(const MomentSeq& mu, const Poly& f);

/// Moments of X + c from those of X (binomial transform).
MomentSeq shift_moments(const MomentSeq& mu, const Rat& c);

struct GramSchmidtResult {
  std::vector<Poly> polys;   ///< f_0..f_N, or f_0..f_{n0} when degenerate at n0
  std::vector<Rat> alpha;    ///< alpha_n for every n the moments determine
  std::vector<Rat> omega;    ///< omega[n] = omega_n, omega[0] = 0
  std::optional<std::size_t> support_bound;  ///< first n with L(f_n^2) == 0

  SzegoJacobi szego_jacobi() const;
};

/// Orthogonalizes 1, X, .., X^N against the moment functional, one monomial
/// at a time, then reads off alpha_n = L(X f_n^2)/L(f_n^2) and
/// omega_n = L(f_n^2)/L(f_{n-1}^2). Stops at the first vanishing norm and
/// records it as support_bound. Needs moments up to degree 2N.
/// Throws InvalidMoments on a negative norm or too few moments.
GramSchmidtResult gram_schmidt_from_moments(const MomentSeq& mu, std::size_t N);

struct HankelStatus {
  enum class Kind { positive, degenerate, invalid };
  Kind kind;
  /// For `degenerate`, the order j of the first singular leading minor
  /// (size j+1). For `invalid`, the first order that breaks positivity.
  std::size_t index = 0;
};

/// Screens the leading principal minors of (moments[i+j]) for orders 0..k.
/// Requires 2k <= size - 1.
HankelStatus hankel_check(const MomentSeq& mu, std::size_t k);

/// Exact determinant by elimination with nonzero-pivot search.
Rat determinant(Matrix<Rat> m);

}  // namespace meixner
