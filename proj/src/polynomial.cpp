#include "meixner/polynomial.hpp"

namespace meixner {

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    Rat c = f.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    const bool negative = c < 0;
    Rat mag = negative ? Rat(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (i == 0 || !unit) {
      const bool frac = !is_integer(mag);
      if (frac && i > 0) os << "(" << to_string(mag) << ")";
      else os << to_string(mag);
    }
    if (i >= 1) os << "X";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace meixner
