#include "meixner/characterize.hpp"

#include "meixner/errors.hpp"

#include <algorithm>
#include <set>

namespace meixner {

namespace {

using Series = std::vector<Rat>;  // truncated power series, index = power of t

Series multiply(const Series& a, const Series& b, std::size_t order) {
  Series out(order + 1);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// Structural checks shared by every moment route.
void require_structure(const TranslationCombo& combo) {
  for (const ComboIssue& issue : validate_combo(combo).issues) {
    if (issue.kind != ComboIssue::Kind::NegativeMean) throw InvalidCombo(issue.message);
  }
}

/// Calls visit(multiplicity) for every partition of m, where multiplicity[j]
/// counts the parts equal to j.
template <typename Visit>
void for_each_partition(std::size_t m, Visit&& visit) {
  std::vector<std::size_t> multiplicity(m + 1, 0);
  // Parts are chosen in non-increasing order.
  auto recurse = [&](auto&& self, std::size_t remaining, std::size_t largest) -> void {
    if (remaining == 0) {
      visit(static_cast<const std::vector<std::size_t>&>(multiplicity));
      return;
    }
    for (std::size_t part = std::min(remaining, largest); part >= 1; --part) {
      ++multiplicity[part];
      self(self, remaining - part, part);
      --multiplicity[part];
    }
  };
  recurse(recurse, m, m);
}

}  // namespace

std::string to_string(ComboIssue::Kind kind) {
  switch (kind) {
    case ComboIssue::Kind::Empty: return "Empty";
    case ComboIssue::Kind::ZeroCoefficient: return "ZeroCoefficient";
    case ComboIssue::Kind::SumNotZero: return "SumNotZero";
    case ComboIssue::Kind::NegativeMean: return "NegativeMean";
    case ComboIssue::Kind::DuplicateShift: return "DuplicateShift";
  }
  return "?";
}

ComboValidity validate_combo(const TranslationCombo& combo) {
  ComboValidity v;
  if (combo.terms.empty()) {
    v.issues.push_back({ComboIssue::Kind::Empty, 0, "Empty: the combination has no terms"});
    return v;
  }
  Rat sum = 0;
  std::set<Rat> shifts;
  for (std::size_t i = 0; i < combo.terms.size(); ++i) {
    const auto& [c, d] = combo.terms[i];
    sum += c;
    const std::string term = "term " + std::to_string(i + 1) + " (" + to_string(c) + ":" + to_string(d) + ")";
    if (!shifts.insert(d).second) {
      v.issues.push_back({ComboIssue::Kind::DuplicateShift, i, "DuplicateShift: " + term + " repeats shift " +
                                                                    to_string(d)});
    }
    if (d == 0) {
      if (c == 0) v.issues.push_back({ComboIssue::Kind::ZeroCoefficient, i, "ZeroCoefficient: " + term});
    } else if (c / d <= 0) {
      v.issues.push_back({ComboIssue::Kind::NegativeMean, i,
                          "NegativeMean: " + term + " has c/d = " + to_string(c / d) + " <= 0"});
    }
  }
  if (sum != 0) {
    v.issues.insert(v.issues.begin(),
                    {ComboIssue::Kind::SumNotZero, 0, "SumNotZero: coefficients sum to " + to_string(sum)});
  }
  return v;
}

void require_valid(const TranslationCombo& combo) {
  const ComboValidity v = validate_combo(combo);
  if (!v.valid()) throw InvalidCombo(v.issues.front().message);
}

CumulantSeq combo_cumulants(const TranslationCombo& combo, std::size_t M) {
  CumulantSeq k{std::vector<Rat>(M + 1)};
  for (std::size_t m = 1; m <= M; ++m)
    for (const auto& [c, d] : combo.terms) k.kappas[m] += c * ipow(d, m - 1);
  return k;
}

MomentSeq moments_via_recursion(const TranslationCombo& combo, std::size_t M) {
  require_structure(combo);
  std::vector<Rat> mu{Rat(1)};
  for (std::size_t m = 1; m <= M; ++m) {
    Rat next = 0;
    for (const auto& [c, d] : combo.terms) {
      Rat inner = 0;  // E[(X + d)^{m-1}]
      for (std::size_t j = 0; j < m; ++j) inner += binomial(m - 1, j) * ipow(d, m - 1 - j) * mu[j];
      next += c * inner;
    }
    mu.push_back(next);
  }
  return MomentSeq{std::move(mu)};
}

MomentSeq moments_via_cumulants(const TranslationCombo& combo, std::size_t M) {
  require_structure(combo);
  const CumulantSeq k = combo_cumulants(combo, M);
  if (M >= 1 && k.kappas[1] != 0) throw std::logic_error("cumulant route: kappa_1 != 0 for a centered combination");
  std::vector<Rat> mu{Rat(1)};
  for (std::size_t m = 1; m <= M; ++m) {
    Rat total = 0;
    for_each_partition(m, [&](const std::vector<std::size_t>& mult) {
      Rat term = factorial(m);
      for (std::size_t j = 1; j <= m; ++j) {
        if (mult[j] == 0) continue;
        term *= ipow(k.kappas[j], mult[j]);
        term /= ipow(factorial(j), mult[j]) * factorial(mult[j]);
      }
      total += term;
    });
    mu.push_back(total);
  }
  return MomentSeq{std::move(mu)};
}

MomentSeq laplace_series(const TranslationCombo& combo, std::size_t M) {
  require_structure(combo);
  // Exponent S(t) = sum over nonzero shifts of (c/d)(e^{dt} - dt - 1).
  Series S(M + 1);
  for (const auto& [c, d] : combo.terms) {
    if (d == 0) continue;
    for (std::size_t j = 2; j <= M; ++j) S[j] += (c / d) * ipow(d, j) / factorial(j);
  }
  // S starts at t^2, so S^j vanishes below t^{2j}.
  Series phi(M + 1);
  Series power(M + 1);
  power[0] = 1;
  for (std::size_t j = 0; 2 * j <= M; ++j) {
    const Rat inv = Rat(1) / factorial(j);
    for (std::size_t i = 0; i <= M; ++i) phi[i] += power[i] * inv;
    power = multiply(power, S, M);
  }
  if (phi[0] != 1) throw std::logic_error("Laplace series: phi(0) != 1");

  // phi' == phi * sum_i c_i e^{d_i t}, compared through t^{M-1}.
  if (M >= 1) {
    Series rate(M);
    for (const auto& [c, d] : combo.terms)
      for (std::size_t j = 0; j < M; ++j) rate[j] += c * ipow(d, j) / factorial(j);
    const Series rhs = multiply(phi, rate, M - 1);
    for (std::size_t j = 0; j < M; ++j) {
      if (phi[j + 1] * static_cast<long>(j + 1) != rhs[j]) {
        throw std::logic_error("Laplace series: phi' != phi * sum c_i e^{d_i t} at t^" + std::to_string(j));
      }
    }
  }

  std::vector<Rat> mu(M + 1);
  for (std::size_t m = 0; m <= M; ++m) mu[m] = phi[m] * factorial(m);
  return MomentSeq{std::move(mu)};
}

BoundCert bound_cert(const TranslationCombo& combo, std::size_t M) {
  BoundCert cert;
  cert.A = 1;  // p = 0
  Rat abs_sum = 0;
  for (const auto& [c, d] : combo.terms) {
    abs_sum += abs(c);
    const Rat ad = abs(d);
    // |d|^p/p! peaks at p = floor(|d|); search one past the ceiling.
    const auto ceiling = static_cast<std::size_t>(
        boost::multiprecision::numerator(ad) / boost::multiprecision::denominator(ad) + 1);
    Rat term = 1;
    for (std::size_t p = 1; p <= ceiling + 1; ++p) {
      term = term * ad / static_cast<long>(p);
      cert.A = std::max(cert.A, term);
    }
  }
  cert.k = std::max(cert.A * abs_sum, Rat(1));

  const MomentSeq mu = moments_via_recursion(combo, M);
  cert.checked_up_to = M;
  for (std::size_t m = 0; m <= M; ++m) {
    bool ok = abs(mu[m]) <= ipow(cert.k, m) * factorial(m);
    if (m % 2 == 0) ok = ok && mu[m] <= ipow(2 * cert.k, m) * factorial(m);
    if (!ok) {
      cert.pass = false;
      cert.first_violation = m;
      break;
    }
  }
  return cert;
}

TranslationCombo beta0_combo(const MeixnerParams& p) {
  validate(p);
  if (p.beta != 0 || p.alpha <= 0) {
    throw InvalidParams("a translation-combination annihilator needs beta == 0 and alpha > 0, got " + to_string(p));
  }
  // With delta = alpha the lowering operator is
  //   t/(2 delta)(T_delta - T_-delta) + (alpha0 delta^2 + alpha tau)/(4 delta^2)(T_delta + T_-delta - 2I),
  // and alpha0 alpha^2 + alpha tau = 2 alpha t, so both brackets carry t/(2 alpha).
  const Rat delta = p.alpha;
  const Rat odd = p.t / (2 * delta);
  const Rat even = (p.alpha0 * delta * delta + p.alpha * derived(p).tau) / (4 * delta * delta);
  TranslationCombo combo;
  for (const auto& [c, d] :
       {std::pair{odd + even, delta}, std::pair{even - odd, Rat(-delta)}, std::pair{Rat(-2 * even), Rat(0)}}) {
    if (c != 0) combo.terms.emplace_back(c, d);
  }
  Rat sum = 0;
  for (const auto& term : combo.terms) sum += term.first;
  if (sum != 0) throw std::logic_error("beta0_combo: coefficients do not sum to zero");
  return combo;
}

}  // namespace meixner
