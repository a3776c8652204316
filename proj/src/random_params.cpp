#include "meixner/random_params.hpp"

#include <algorithm>
#include <set>

namespace meixner {

namespace {

/// floor for rationals
Integer floor_rat(const Rat& r) {
  Integer q = boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
  if (Rat(q) > r) q -= 1;
  return q;
}

}  // namespace

long draw_int(Rng& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

Rat draw_rat(Rng& rng, const Rat& lo, const Rat& hi, long max_den) {
  const long q = draw_int(rng, 1, max_den);
  // ceil(lo q) .. floor(hi q)
  const long n_lo = -floor_rat(-lo * q).convert_to<long>();
  const long n_hi = floor_rat(hi * q).convert_to<long>();
  return Rat(draw_int(rng, n_lo, n_hi), q);
}

MeixnerParams draw_params(Rng& rng) {
  const Rat three(3);
  const Rat two(2);
  for (;;) {
    MeixnerParams p;
    p.alpha0 = draw_rat(rng, -two, two);
    p.t = draw_rat(rng, Rat(0), three);
    switch (draw_int(rng, 0, 7)) {
      case 4:  // beta == 0: Gaussian or Poisson
        p.alpha = draw_int(rng, 0, 1) == 0 ? Rat(0) : draw_rat(rng, Rat(0), three);
        p.beta = 0;
        break;
      case 5: {  // alpha^2 == 4 beta with beta <= 2
        const Rat s = draw_rat(rng, Rat(1, 4), Rat(7, 5));
        p.alpha = 2 * s;
        p.beta = s * s;
        break;
      }
      case 6: {  // alpha^2 - 4 beta = d^2 > 0 with beta > 0
        p.alpha = draw_rat(rng, Rat(1, 2), three);
        const Rat d = draw_rat(rng, Rat(0), p.alpha);
        p.beta = (p.alpha * p.alpha - d * d) / 4;
        break;
      }
      default:
        p.alpha = draw_rat(rng, Rat(0), three);
        p.beta = draw_rat(rng, -two, two);
        break;
    }
    if (p.beta < 0) {
      const long max_k = floor_rat(three / -p.beta).convert_to<long>();
      p.t = -p.beta * draw_int(rng, 1, std::max(max_k, 1L));
    }
    if (!check_params(p)) return p;
  }
}

MeixnerParams draw_params_delta_zero(Rng& rng) {
  MeixnerParams p;
  p.alpha0 = draw_rat(rng, Rat(-2), Rat(2));
  do {
    p.t = draw_rat(rng, Rat(0), Rat(3));
  } while (p.t == 0);
  const Rat s = draw_int(rng, 0, 4) == 0 ? Rat(0) : draw_rat(rng, Rat(1, 4), Rat(7, 5));
  p.alpha = 2 * s;
  p.beta = s * s;
  return p;
}

TranslationCombo draw_combo(Rng& rng) {
  TranslationCombo combo;
  std::set<Rat> used;
  const long count = draw_int(rng, 1, 3);
  Rat sum = 0;
  while (static_cast<long>(combo.terms.size()) < count) {
    const Rat d = draw_rat(rng, Rat(-3), Rat(3), 3);
    if (d == 0 || !used.insert(d).second) continue;
    const Rat mean = draw_rat(rng, Rat(1, 3), Rat(2), 3);  // c/d
    if (mean == 0) continue;
    combo.terms.emplace_back(mean * d, d);
    sum += mean * d;
  }
  if (sum != 0) combo.terms.emplace_back(-sum, Rat(0));
  return combo;
}

}  // namespace meixner
