// Dense univariate polynomials over an arbitrary scalar ring.
#pragma once

#include "meixner/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace meixner {

/// Coefficient i multiplies X^i. The coefficient vector never has a
/// trailing zero; the zero polynomial is the empty vector and has degree -1.
template <typename Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const Scalar& value) { return Polynomial({value}); }

  static Polynomial monomial(std::size_t n, const Scalar& scale = Scalar(1)) {
    std::vector<Scalar> c(n + 1, Scalar(0));
    c[n] = scale;
    return Polynomial(std::move(c));
  }

  /// The position variable X.
  static Polynomial x() { return monomial(1); }

  /// a*X + b
  static Polynomial linear(const Scalar& a, const Scalar& b) { return Polynomial({b, a}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<Scalar>& coeffs() const { return c_; }

  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
  Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

  /// Horner evaluation.
  Scalar operator()(const Scalar& at) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Scalar& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& v : out.c_) v = -v;
    return out;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == Scalar(0)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

using Poly = Polynomial<Rat>;

/// n-th derivative; over-differentiation gives the zero polynomial.
template <typename Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& f, std::size_t n = 1) {
  if (static_cast<int>(n) > f.degree()) return {};
  std::vector<Scalar> out(f.size() - n, Scalar(0));
  for (std::size_t i = n; i < f.size(); ++i) {
    Scalar falling(1);
    for (std::size_t j = 0; j < n; ++j) falling *= Scalar(static_cast<long>(i - j));
    out[i - n] = f.coeffs()[i] * falling;
  }
  return Polynomial<Scalar>(std::move(out));
}

/// Translation f(X) -> f(X + c), expanded with binomial coefficients.
template <typename Scalar>
Polynomial<Scalar> shift(const Polynomial<Scalar>& f, const Scalar& c) {
  if (f.is_zero() || c == Scalar(0)) return f;
  const std::size_t n = f.size();
  std::vector<Scalar> out(n, Scalar(0));
  std::vector<Scalar> row{Scalar(1)};  // binomial row i of Pascal's triangle
  std::vector<Scalar> cpow{Scalar(1)};
  for (std::size_t i = 1; i < n; ++i) cpow.push_back(cpow.back() * c);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      std::vector<Scalar> next(i + 1, Scalar(1));
      for (std::size_t j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
      row = std::move(next);
    }
    const Scalar& a = f.coeffs()[i];
    if (a == Scalar(0)) continue;
    for (std::size_t j = 0; j <= i; ++j) out[j] += a * row[j] * cpow[i - j];
  }
  return Polynomial<Scalar>(std::move(out));
}

template <typename Scalar>
Scalar eval(const Polynomial<Scalar>& f, const Scalar& at) {
  return f(at);
}

/// Coefficient-wise conversion between scalar types.
template <typename To, typename From, typename Convert>
Polynomial<To> convert(const Polynomial<From>& f, Convert&& conv) {
  std::vector<To> out;
  out.reserve(f.size());
  for (const auto& c : f.coeffs()) out.push_back(conv(c));
  return Polynomial<To>(std::move(out));
}

/// Human-readable rendering, highest degree first, e.g. "X^2 - 3X + 1".
std::string to_string(const Poly& f);

inline std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << to_string(f); }

}  // namespace meixner
