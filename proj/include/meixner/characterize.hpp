// Random variables whose annihilation operator is a finite combination of
// translations, sum_i c_i T_{d_i}. Their moments are computed three ways
// (operator recursion, Poisson cumulants, Laplace series) and checked for the
// factorial growth bounds.
#pragma once

#include "meixner/meixner.hpp"
#include "meixner/orthopoly.hpp"
#include "meixner/translation.hpp"

#include <string>
#include <vector>

namespace meixner {

struct ComboIssue {
  enum class Kind { Empty, ZeroCoefficient, SumNotZero, NegativeMean, DuplicateShift };
  Kind kind;
  std::size_t index = 0;  ///< offending term, where one applies
  std::string message;
};

std::string to_string(ComboIssue::Kind kind);

struct ComboValidity {
  std::vector<ComboIssue> issues;

  bool valid() const { return issues.empty(); }
};

/// Checks sum c_i == 0, c_i/d_i > 0 for every nonzero shift, and pairwise
/// distinct shifts (so at most one d_i == 0).
ComboValidity validate_combo(const TranslationCombo& combo);

/// Throws InvalidCombo carrying the first issue.
void require_valid(const TranslationCombo& combo);

/// Cumulants kappa_1..kappa_M; index 0 is unused and left at 0.
struct CumulantSeq {
  std::vector<Rat> kappas;
};

/// kappa_m = sum_i c_i d_i^{m-1}; kappa_1 = sum c_i = 0.
CumulantSeq combo_cumulants(const TranslationCombo& combo, std::size_t M);

// The three moment routes only need the algebraic structure of the combo:
// nonempty, sum c_i == 0, distinct shifts, no zero coefficients. Positivity of
// the Poisson means is what validate_combo adds on top. They throw
// InvalidCombo when the structure is broken.

/// E[X^m] = sum_i c_i E[(X + d_i)^{m-1}], unrolled binomially.
MomentSeq moments_via_recursion(const TranslationCombo& combo, std::size_t M);

/// Moments from the cumulants by summing over integer partitions of m.
MomentSeq moments_via_cumulants(const TranslationCombo& combo, std::size_t M);

/// m! [t^m] of phi(t) = exp(sum_i (c_i/d_i)(e^{d_i t} - d_i t - 1)) as an
/// exact power series. Also checks phi(0) == 1 and phi' == phi sum_i c_i e^{d_i t}
/// through order M - 1, throwing std::logic_error if either fails.
MomentSeq laplace_series(const TranslationCombo& combo, std::size_t M);

struct BoundCert {
  Rat k;  ///< max(A sum |c_i|, 1)
  Rat A;  ///< max_i max_p |d_i|^p / p!
  std::size_t checked_up_to = 0;
  bool pass = true;
  /// First m where |E[X^m]| > k^m m! or E[X^2j] > (2k)^2j (2j)! (m = 2j).
  std::optional<std::size_t> first_violation;
};

/// Verifies |E[X^m]| <= k^m m! and E[X^{2j}] <= (2k)^{2j} (2j)! for m, 2j <= M.
BoundCert bound_cert(const TranslationCombo& combo, std::size_t M);

/// For beta == 0 and alpha > 0, the annihilator a- of the centered variable
/// X - alpha0 as a translation combination: (t/alpha) T_alpha - (t/alpha) I.
/// Throws InvalidParams otherwise.
TranslationCombo beta0_combo(const MeixnerParams& p);

}  // namespace meixner
