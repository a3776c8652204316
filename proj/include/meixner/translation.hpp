// Operators built from translations T_c f(X) = f(X + c), and the translation
// view of the Meixner operators.
#pragma once

#include "meixner/meixner.hpp"
#include "meixner/polynomial.hpp"

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace meixner {

/// coeff(X) D^derivative T_shift
template <typename Scalar>
struct TranslationTerm {
  Polynomial<Scalar> coeff;
  Scalar shift{0};
  std::size_t derivative = 0;
};

/// A finite sum of TranslationTerms acting on polynomials.
template <typename Scalar>
class TranslationOperator {
 public:
  TranslationOperator() = default;

  static TranslationOperator identity() { return translate(Scalar(0)); }
  static TranslationOperator translate(const Scalar& c) {
    TranslationOperator op;
    op.terms_.push_back({Polynomial<Scalar>::constant(Scalar(1)), c, 0});
    return op;
  }
  static TranslationOperator momentum(std::size_t power = 1) {
    TranslationOperator op;
    op.terms_.push_back({Polynomial<Scalar>::constant(Scalar(1)), Scalar(0), power});
    return op;
  }

  const std::vector<TranslationTerm<Scalar>>& terms() const { return terms_; }

  Polynomial<Scalar> apply(const Polynomial<Scalar>& f) const {
    Polynomial<Scalar> out;
    for (const auto& term : terms_) out += term.coeff * derivative(shift(f, term.shift), term.derivative);
    return out;
  }

  TranslationOperator& operator+=(const TranslationOperator& rhs) {
    for (const auto& t : rhs.terms_) add_term(t);
    return *this;
  }
  TranslationOperator& operator-=(const TranslationOperator& rhs) { return *this += Scalar(-1) * rhs; }

  /// Left multiplication by a polynomial: (p(X) * op) f = p(X) (op f).
  friend TranslationOperator operator*(const Polynomial<Scalar>& p, const TranslationOperator& op) {
    TranslationOperator out;
    for (const auto& t : op.terms_) out.add_term({p * t.coeff, t.shift, t.derivative});
    return out;
  }
  friend TranslationOperator operator*(const Scalar& s, const TranslationOperator& op) {
    return Polynomial<Scalar>::constant(s) * op;
  }
  friend TranslationOperator operator+(TranslationOperator a, const TranslationOperator& b) { return a += b; }
  friend TranslationOperator operator-(TranslationOperator a, const TranslationOperator& b) { return a -= b; }

 private:
  void add_term(const TranslationTerm<Scalar>& t) {
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      if (it->shift == t.shift && it->derivative == t.derivative) {
        it->coeff += t.coeff;
        if (it->coeff.is_zero()) terms_.erase(it);
        return;
      }
    }
    if (!t.coeff.is_zero()) terms_.push_back(t);
  }

  std::vector<TranslationTerm<Scalar>> terms_;
};

/// The delta-momentum operator (T_delta - I)/delta, and D itself at delta = 0.
template <typename Scalar>
TranslationOperator<Scalar> delta_momentum(const Scalar& delta) {
  using Op = TranslationOperator<Scalar>;
  if (delta == Scalar(0)) return Op::momentum();
  const Scalar inv = Scalar(1) / delta;
  return inv * Op::translate(delta) - inv * Op::identity();
}

/// The Meixner operators written with T_delta, T_-delta and I, delta^2 = Delta.
/// At delta == 0 the derivative (1-Meixner) forms are used instead.
template <typename Scalar>
struct MeixnerTranslationForms {
  Scalar delta;
  TranslationOperator<Scalar> U, V, N, a0, aminus, aplus;

  const TranslationOperator<Scalar>& get(MeixnerOp op) const {
    switch (op) {
      case MeixnerOp::U: return U;
      case MeixnerOp::V: return V;
      case MeixnerOp::N: return N;
      case MeixnerOp::a0: return a0;
      case MeixnerOp::aminus: return aminus;
      case MeixnerOp::aplus: return aplus;
    }
    return U;
  }
};

/// Builds the translation forms for an explicit delta with delta^2 = Delta.
/// `lift` converts the rational parameters into Scalar.
template <typename Scalar, typename Lift>
MeixnerTranslationForms<Scalar> build_translation_forms(const MeixnerParams& p, const Scalar& delta, Lift lift) {
  using Op = TranslationOperator<Scalar>;
  using P = Polynomial<Scalar>;
  const MeixnerDerived d = derived(p);
  const Scalar alpha = lift(p.alpha), alpha0 = lift(p.alpha0), beta = lift(p.beta), t = lift(p.t), tau = lift(d.tau);
  const Scalar half = lift(Rat(1, 2));
  const P X = P::x();
  const P centered = P::linear(Scalar(1), -alpha0);  // X - alpha0
  const P affine = P::linear(alpha, tau);            // alpha X + tau
  const Op I = Op::identity();

  MeixnerTranslationForms<Scalar> f{delta, {}, {}, {}, {}, {}, {}};
  if (delta == Scalar(0)) {
    f.U = alpha0 * half * I + (half * affine) * Op::momentum(1);
    f.N = centered * Op::momentum(1) - (half * affine) * Op::momentum(2);
    f.a0 = alpha * f.N + alpha0 * I;
    f.aminus = f.U - half * f.a0;
  } else {
    const Op Tp = Op::translate(delta), Tm = Op::translate(-delta);
    const Op odd = Tp - Tm;                          // T_delta - T_-delta
    const Op even = Tp + Tm - Scalar(2) * I;         // T_delta + T_-delta - 2I
    const Scalar dd = delta * delta;
    const Scalar quarter = half * half;
    f.U = alpha0 * half * I - (quarter * centered) * even + (affine * (quarter / delta)) * odd;
    f.N = (centered * (half / delta)) * odd - (affine * (half / dd)) * even;
    f.a0 = alpha * f.N + alpha0 * I;
    f.aminus = (t * half / delta) * odd + ((alpha0 * dd + alpha * tau) * quarter / dd) * even +
               (X * (beta / dd)) * even;
  }
  f.V = X * I - f.U;
  f.aplus = X * I - f.aminus - f.a0;
  return f;
}

struct TranslationAgreement {
  MeixnerOp op;
  bool pass = true;
  std::size_t max_degree = 0;
  double max_deviation = 0.0;  ///< numeric mode only
  std::optional<std::size_t> first_failure;
};

struct TranslationReport {
  enum class Mode { exact_if_square, numeric };
  Mode mode;
  std::optional<MeixnerTranslationForms<Rat>> exact;
  std::optional<MeixnerTranslationForms<std::complex<double>>> numeric;
  std::vector<TranslationAgreement> agreement;  ///< U, V, N, a0, a-, a+

  bool all_pass() const;
};

/// Translation forms plus their agreement with the Delta-power series on X^m,
/// m <= max_degree. Exact mode throws NotASquare unless Delta is a rational
/// square; numeric mode uses a complex delta and a relative tolerance of 1e-9.
TranslationReport translation_form(const MeixnerParams& p, TranslationReport::Mode mode,
                                   std::size_t max_degree = 12);

/// sum_i c_i T_{d_i}
struct TranslationCombo {
  std::vector<std::pair<Rat, Rat>> terms;  ///< (c_i, d_i)

  /// Parses "c1:d1,c2:d2,..."; throws std::invalid_argument.
  static TranslationCombo parse(const std::string& text);

  TranslationOperator<Rat> to_operator() const;

  friend bool operator==(const TranslationCombo&, const TranslationCombo&) = default;
};

std::string to_string(const TranslationCombo& combo);

}  // namespace meixner
