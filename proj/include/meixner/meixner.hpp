// Classical Meixner systems: alpha_n = alpha n + alpha0,
// omega_n = beta n^2 + (t - beta) n, and the closed-form position-momentum
// decompositions of their operators.
//
// All closed forms are written in powers of Delta = alpha^2 - 4 beta rather
// than its square root, so they stay rational even when Delta < 0 or Delta is
// not a perfect square.
#pragma once

#include "meixner/operator_algebra.hpp"
#include "meixner/orthopoly.hpp"
#include "meixner/pmd.hpp"

#include <optional>
#include <string>

namespace meixner {

struct MeixnerParams {
  Rat alpha;
  Rat alpha0;
  Rat beta;
  Rat t;

  /// Parses four rational literals; throws std::invalid_argument.
  static MeixnerParams parse(const std::string& alpha, const std::string& alpha0, const std::string& beta,
                             const std::string& t);

  friend bool operator==(const MeixnerParams&, const MeixnerParams&) = default;
};

std::string to_string(const MeixnerParams& p);

/// Admissibility: t > 0, alpha >= 0, and either beta >= 0 or t/(-beta) is a
/// positive integer. Returns the violated condition, if any.
std::optional<std::string> check_params(const MeixnerParams& p);

/// Throws InvalidParams naming the violated condition.
void validate(const MeixnerParams& p);

struct MeixnerDerived {
  Rat Delta;  ///< alpha^2 - 4 beta
  Rat tau;    ///< 2t - alpha alpha0
  std::optional<std::size_t> support_bound;  ///< 1 + t/(-beta) when beta < 0
};

MeixnerDerived derived(const MeixnerParams& p);

/// Validates, then returns the recurrence data.
SzegoJacobi szego_jacobi(const MeixnerParams& p);

/// (alpha/2) X - (Delta/2) N + (tau/2) I on span{f_0..f_N}.
GradedOp comm_UX_closed_form(const MeixnerParams& p, std::size_t N);

/// Semi-annihilation U:
///   A_0 = alpha0/2,
///   A_{2n}   = -(1/2) Delta^n/(2n)! (X - alpha0),          n >= 1,
///   A_{2n+1} = Delta^n/(2n+1)! ((alpha/2)(X - alpha0) + t), n >= 0.
PMDecomp pmd_U(const MeixnerParams& p, std::size_t order);

/// V = X - U.
PMDecomp pmd_V(const MeixnerParams& p, std::size_t order);

/// Number operator:
///   A_{2n+1} = Delta^n/(2n+1)! (X - alpha0),        n >= 0,
///   A_{2n}   = -Delta^{n-1}/(2n)! (alpha X + tau),  n >= 1.
PMDecomp pmd_number(const MeixnerParams& p, std::size_t order);

/// a0 = alpha N + alpha0 I.
PMDecomp pmd_a0(const MeixnerParams& p, std::size_t order);

/// a- = U - a0/2.
PMDecomp pmd_aminus(const MeixnerParams& p, std::size_t order);

/// a+ = X - a- - a0.
PMDecomp pmd_aplus(const MeixnerParams& p, std::size_t order);

enum class MeixnerOp { U, V, N, a0, aminus, aplus };

/// "U", "V", "N", "a0", "a-", "a+".
std::string to_string(MeixnerOp op);
MeixnerOp parse_op(const std::string& name);

/// Dispatches to the pmd_* closed form.
PMDecomp closed_form(MeixnerOp op, const MeixnerParams& p, std::size_t order);

/// Grade shift of each operator: -1 for a-, +1 for V and a+, 0 otherwise.
int faithfulness(MeixnerOp op);

/// The f-basis matrix of the operator built from the recurrence.
GradedOp operator_matrix(MeixnerOp op, const SzegoJacobi& sj, std::size_t N);

/// Extracts the decomposition from the operator matrix at truncation N and
/// compares it with the closed form through min(order, valid degree).
VerifyReport check_closed_form(MeixnerOp op, const MeixnerParams& p, std::size_t N, std::size_t order);

/// For Delta == 0: U must equal alpha0/2 + (1/2)(alpha X + tau) D, with every
/// higher coefficient vanishing.
VerifyReport one_meixner_limit_check(const MeixnerParams& p0, std::size_t order);

/// [[U,X],X] = -(Delta/2)(X - 2U) on the matrices.
VerifyReport double_commutator_check(const MeixnerParams& p, std::size_t N);

/// Matrix [U, X] against comm_UX_closed_form.
VerifyReport comm_UX_check(const MeixnerParams& p, std::size_t N);

}  // namespace meixner
