#include "meixner/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace meixner {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) {
    return std::isdigit(ch) != 0;
  });
}

/// Decimal digits to Integer. Leading zeros are dropped so that they are not
/// read as an octal prefix.
Integer decimal(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return Integer(std::string(digits));
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
  }
  Integer value = decimal(s);
  return negative ? Integer(-value) : value;
}

}  // namespace

std::string to_string(const Rat& r) { return r.str(); }

Rat parse_rat(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    }
    Integer den = decimal(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rat(num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    Integer num = decimal(digits.empty() ? std::string_view("0") : std::string_view(digits));
    Integer den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
    Rat value(num, den);
    return negative ? Rat(-value) : value;
  }

  return Rat(parse_integer(text, text));
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

bool is_integer(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

Rat factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return Rat(f);
}

Rat binomial(std::size_t n, std::size_t k) {
  if (k > n) return Rat(0);
  k = std::min(k, n - k);
  Integer b = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    b *= static_cast<unsigned long>(n - k + i);
    b /= static_cast<unsigned long>(i);
  }
  return Rat(b);
}

std::optional<Rat> exact_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  Integer num = boost::multiprecision::numerator(r);
  Integer den = boost::multiprecision::denominator(r);
  Integer sn = boost::multiprecision::sqrt(num);
  Integer sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rat(sn, sd);
}

}  // namespace meixner
