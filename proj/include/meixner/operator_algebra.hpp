// Quantum, semi-quantum and number operators of a one-dimensional
// orthogonal polynomial system, and the universal commutator checks.
#pragma once

#include "meixner/graded_op.hpp"
#include "meixner/orthopoly.hpp"
#include "meixner/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace meixner {

using GradedOp = GradedOperator<Rat>;

struct QuantumOps {
  GradedOp aplus;   ///< f_n -> f_{n+1}
  GradedOp azero;   ///< f_n -> alpha_n f_n
  GradedOp aminus;  ///< f_n -> omega_n f_{n-1}
};

struct SemiOps {
  GradedOp U;  ///< a- + a0/2
  GradedOp V;  ///< a+ + a0/2
};

/// Creation, preservation and annihilation on span{f_0..f_N}. If N + 1 equals
/// the support bound the space is invariant and all operators are closed.
/// Throws TruncationBeyondSupport if N >= support_bound.
QuantumOps quantum_ops(const SzegoJacobi& sj, std::size_t N);

SemiOps semi_ops(const QuantumOps& q);

GradedOp number_op(std::size_t N, bool closed = false);
GradedOp identity_op(std::size_t N, bool closed = false);

/// Multiplication by X, assembled as a+ + a0 + a-.
GradedOp position_op(const QuantumOps& q);

/// Largest truncation that stays inside the support: min(N, support_bound - 1).
std::size_t effective_truncation(const SzegoJacobi& sj, std::size_t N);

struct VerifyReport {
  std::string identity;
  bool pass = true;
  long max_checked_degree = -1;
  std::optional<std::size_t> first_failure;  ///< basis index n of the first mismatch
  std::optional<Poly> residual;              ///< (lhs - rhs) f_n as a polynomial in X
};

/// Compares two operators column by column on input degrees
/// 0..min(max_degree, valid degree of both). With `basis` given, the residual
/// is expanded into a polynomial; otherwise its coefficients are the f-basis
/// coordinates.
VerifyReport compare_ops(std::string name, const GradedOp& lhs, const GradedOp& rhs, long max_degree,
                         const std::vector<Poly>* basis = nullptr);

/// Checks the six universal commutation relations exactly on input degrees
/// up to N - 2 (all of them when the truncation is closed):
///   [N,a+] = a+, [N,a0] = 0, [a-,N] = a-, [N,V] = a+, [U,N] = a-,
///   [N,X] = V - U = a+ - a-.
std::vector<VerifyReport> verify_universal(const SzegoJacobi& sj, std::size_t N);

/// Triangular change of basis: column n holds the monomial coefficients of f_n.
Matrix<Rat> change_of_basis(const std::vector<Poly>& f);

/// An operator acting on {1, X, .., X^N}: column j is T X^j.
struct MonomialOp {
  Matrix<Rat> entries;
  long valid_degree = -1;  ///< columns beyond this are truncation-affected
};

/// Conjugates A by the basis change from monic_polys(sj, N).
MonomialOp to_monomial_basis(const GradedOp& A, const SzegoJacobi& sj);

}  // namespace meixner
