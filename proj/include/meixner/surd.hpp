// Exact arithmetic in Q(sqrt(R)) for a fixed rational radicand R.
#pragma once

#include "meixner/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace meixner {

/// a + b sqrt(radicand). A value with b == 0 is rational and combines with
/// surds of any radicand; two irrational operands must share the radicand.
class Surd {
 public:
  Surd() = default;
  Surd(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Surd(const Rat& v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Surd(const Rat& a, const Rat& b, const Rat& radicand) : a_(a), b_(b), radicand_(radicand) {
    normalize();
    canonicalize();
  }

  /// sqrt(r), folded to a rational when r is a rational square.
  static Surd sqrt(const Rat& r) {
    if (r < 0) throw std::domain_error("Surd::sqrt of negative " + to_string(r));
    return Surd(0, 1, r);
  }

  const Rat& rational_part() const { return a_; }
  const Rat& irrational_part() const { return b_; }
  const Rat& radicand() const { return radicand_; }
  bool is_rational() const { return b_ == 0; }

  /// Throws std::domain_error unless the value is rational.
  Rat to_rational() const {
    if (!is_rational()) throw std::domain_error("irrational value " + str());
    return a_;
  }

  double to_double() const { return meixner::to_double(a_) + meixner::to_double(b_) * std::sqrt(meixner::to_double(radicand_)); }

  Surd conjugate() const { return Surd(a_, -b_, radicand_); }

  std::string str() const {
    if (is_rational()) return to_string(a_);
    std::string out = a_ == 0 ? "" : to_string(a_) + " + ";
    if (b_ != 1) out += "(" + to_string(b_) + ")*";
    return out + "sqrt(" + to_string(radicand_) + ")";
  }

  Surd& operator+=(const Surd& o) {
    const Rat r = common(o);
    a_ += o.a_;
    b_ += o.b_;
    radicand_ = r;
    normalize();
    return *this;
  }
  Surd& operator-=(const Surd& o) { return *this += -o; }
  Surd& operator*=(const Surd& o) {
    const Rat r = common(o);
    const Rat a = a_ * o.a_ + b_ * o.b_ * r;
    const Rat b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    radicand_ = r;
    normalize();
    return *this;
  }
  Surd& operator/=(const Surd& o) {
    const Rat norm = o.a_ * o.a_ - o.b_ * o.b_ * o.radicand_;
    if (norm == 0) throw std::domain_error("division by zero in Q(sqrt)");
    *this *= o.conjugate();
    a_ /= norm;
    b_ /= norm;
    return *this;
  }

  friend Surd operator-(Surd s) {
    s.a_ = -s.a_;
    s.b_ = -s.b_;
    return s;
  }
  friend Surd operator+(Surd x, const Surd& y) { return x += y; }
  friend Surd operator-(Surd x, const Surd& y) { return x -= y; }
  friend Surd operator*(Surd x, const Surd& y) { return x *= y; }
  friend Surd operator/(Surd x, const Surd& y) { return x /= y; }
  friend bool operator==(const Surd& x, const Surd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.radicand_ == y.radicand_);
  }

 private:
  Rat common(const Surd& o) const {
    if (b_ == 0) return o.radicand_;
    if (o.b_ == 0 || o.radicand_ == radicand_) return radicand_;
    throw std::domain_error("mixed radicands " + to_string(radicand_) + " and " + to_string(o.radicand_));
  }

  /// Rewrites the radicand as a square-free integer so that equal fields
  /// compare equal, e.g. sqrt(1/3) = (1/3) sqrt(3) and sqrt(8) = 2 sqrt(2).
  /// Square factors are searched by trial division up to 10^5.
  void canonicalize() {
    if (b_ == 0) return;
    const Integer q = boost::multiprecision::denominator(radicand_);
    Integer m = boost::multiprecision::numerator(radicand_) * q;
    b_ /= Rat(q);
    for (long k = 2; k <= 100000 && Integer(k) * k <= m; ++k) {
      const Integer kk = Integer(k) * k;
      while (m % kk == 0) {
        m /= kk;
        b_ *= k;
      }
    }
    radicand_ = Rat(m);
  }

  void normalize() {
    if (b_ == 0) return;
    if (auto root = exact_sqrt(radicand_)) {
      a_ += b_ * *root;
      b_ = 0;
      radicand_ = 0;
    }
  }

  Rat a_{0};
  Rat b_{0};
  Rat radicand_{0};
};

}  // namespace meixner
