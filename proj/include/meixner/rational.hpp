// Exact scalar type and small number-theoretic helpers.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace meixner {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);

/// Accepts "p", "p/q" and finite decimals such as "-1.25".
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rat parse_rat(std::string_view text);

double to_double(const Rat& r);

bool is_integer(const Rat& r);

Rat factorial(std::size_t n);
Rat binomial(std::size_t n, std::size_t k);

/// Rational square root if one exists.
std::optional<Rat> exact_sqrt(const Rat& r);

/// x^n for any ring element; pow(x, 0) == 1 including x == 0.
template <typename Scalar>
Scalar ipow(Scalar x, std::size_t n) {
  Scalar result(1);
  while (n > 0) {
    if (n & 1U) result *= x;
    n >>= 1U;
    if (n > 0) x *= x;
  }
  return result;
}

}  // namespace meixner
