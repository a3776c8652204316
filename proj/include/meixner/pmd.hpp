// Position-momentum decompositions T = sum_n A_n(X) D^n of grade-faithful
// operators on polynomials.
#pragma once

#include "meixner/matrix.hpp"
#include "meixner/polynomial.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace meixner {

/// coeffs[n] = A_n. deg A_n <= n + k, and trailing zero coefficients are
/// trimmed so that equal operators compare equal.
struct PMDecomp {
  int k = 0;
  std::vector<Poly> coeffs;

  PMDecomp() = default;
  PMDecomp(int k_, std::vector<Poly> c) : k(k_), coeffs(std::move(c)) { trim(); }

  /// A_n, zero beyond the stored range.
  Poly coefficient(std::size_t n) const { return n < coeffs.size() ? coeffs[n] : Poly{}; }

  /// Keeps A_0..A_order.
  PMDecomp truncated(std::size_t order) const;

  /// Number of nonzero A_n.
  std::size_t nonzero_terms() const;

  void trim();

  friend bool operator==(const PMDecomp& a, const PMDecomp& b) { return a.coeffs == b.coeffs; }
};

/// Coefficientwise arithmetic; the result's k is the larger of the two.
PMDecomp operator+(const PMDecomp& a, const PMDecomp& b);
PMDecomp operator-(const PMDecomp& a, const PMDecomp& b);
PMDecomp operator*(const Rat& s, const PMDecomp& a);

/// Decomposition of multiplication by a polynomial p (A_0 = p).
PMDecomp multiplication(const Poly& p);

/// Recovers A_0..A_N from T X^m = sum_{n<=m} A_n(X) m!/(m-n)! X^{m-n},
/// peeling one coefficient per column of the monomial-basis matrix T.
/// Throws NotFaithful if some column T X^m has degree above m + k.
PMDecomp extract_pmd(const Matrix<Rat>& T, int k, std::size_t N);

/// sum_n A_n f^{(n)}.
Poly apply_pmd(const PMDecomp& p, const Poly& f);

/// Monomial-basis matrix of p on {1..X^N}, with rows sized to hold every image.
Matrix<Rat> pmd_matrix(const PMDecomp& p, std::size_t N);

enum class Letter { X, D };
using XDWord = std::vector<Letter>;

/// Parses a word such as "DDX"; throws std::invalid_argument on other letters.
XDWord parse_word(const std::string& text);

/// Rewrites an operator word into position-left, momentum-right form using
/// [D, X] = I. The word is read as an operator product, so its rightmost
/// letter acts first. k = #X - #D.
PMDecomp normal_order(const XDWord& word);

/// Applies a word to f letter by letter, rightmost letter first.
Poly apply_word(const XDWord& word, const Poly& f);

}  // namespace meixner
