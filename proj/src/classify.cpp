#include "meixner/classify.hpp"

#include "meixner/errors.hpp"

#include <cmath>

namespace meixner {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

/// Stirling numbers of the second kind S(m, j), 0 <= j <= m <= M.
std::vector<std::vector<Rat>> stirling2(std::size_t M) {
  std::vector<std::vector<Rat>> S(M + 1, std::vector<Rat>(M + 1));
  S[0][0] = 1;
  for (std::size_t m = 1; m <= M; ++m)
    for (std::size_t j = 1; j <= m; ++j) S[m][j] = S[m - 1][j - 1] + static_cast<long>(j) * S[m - 1][j];
  return S;
}

/// Raw moments from factorial moments E[(Y)_j] via Stirling numbers.
template <typename Scalar>
std::vector<Scalar> from_factorial_moments(const std::vector<Scalar>& factorial_moments) {
  const std::size_t M = factorial_moments.size() - 1;
  const auto S = stirling2(M);
  std::vector<Scalar> mu(M + 1);
  for (std::size_t m = 0; m <= M; ++m)
    for (std::size_t j = 0; j <= m; ++j) mu[m] += Scalar(S[m][j]) * factorial_moments[j];
  return mu;
}

/// Moments of scale * Y + shift from those of Y.
template <typename Scalar>
std::vector<Scalar> affine_moments(const std::vector<Scalar>& mu, const Scalar& scale, const Scalar& shift) {
  std::vector<Scalar> out(mu.size());
  for (std::size_t m = 0; m < mu.size(); ++m)
    for (std::size_t j = 0; j <= m; ++j) out[m] += Scalar(binomial(m, j)) * ipow(scale, j) * ipow(shift, m - j) * mu[j];
  return out;
}

MomentSeq to_moments(const std::vector<Surd>& mu) {
  std::vector<Rat> out;
  out.reserve(mu.size());
  for (const Surd& s : mu) out.push_back(s.to_rational());
  return MomentSeq{std::move(out)};
}

MomentSeq to_moments(std::vector<Rat> mu) { return MomentSeq{std::move(mu)}; }

}  // namespace

std::string class_name(const MeixnerClass& cls) {
  static const char* const names[] = {"Gaussian", "Poisson", "Pascal", "Gamma", "HyperbolicSecant", "Binomial"};
  return names[cls.index()];
}

int class_number(const MeixnerClass& cls) { return static_cast<int>(cls.index()) + 1; }

std::array<bool, 6> class_predicates(const MeixnerParams& p) {
  const Rat Delta = p.alpha * p.alpha - 4 * p.beta;
  return {p.alpha == 0 && p.beta == 0,
          p.beta == 0 && p.alpha != 0,
          p.beta > 0 && Delta > 0,
          p.beta > 0 && Delta == 0,
          p.beta > 0 && Delta < 0,
          p.beta < 0};
}

MeixnerClass classify(const MeixnerParams& p) {
  validate(p);
  const MeixnerDerived dv = derived(p);
  const Rat& alpha = p.alpha;
  const Rat& beta = p.beta;
  const Rat& t = p.t;

  if (beta == 0 && alpha == 0) return GaussianClass{p.alpha0, t};
  if (beta == 0) return PoissonClass{t / (alpha * alpha), alpha, p.alpha0 - t / alpha};

  if (beta > 0 && dv.Delta > 0) {
    const Surd d = Surd::sqrt(dv.Delta);
    const Surd prob = Surd(2) * d / (Surd(alpha) + d);
    const Surd shift = Surd(p.alpha0) - Surd(t / (2 * beta)) * (Surd(alpha) - d);
    return PascalClass{d, prob, t / beta, d, shift};
  }
  if (beta > 0 && dv.Delta == 0) return GammaClass{t / beta, alpha / 2, p.alpha0 - 2 * t / alpha};

  if (beta > 0) {
    const Rat gamma_sq = -dv.Delta;
    const Surd gamma = Surd::sqrt(gamma_sq);
    const Surd r = Surd::sqrt(4 * beta);
    // 2t/(r gamma) = t/sqrt(beta (4 beta - alpha^2))
    const Rat prod = beta * gamma_sq;
    const Surd k = Surd(t) / Surd::sqrt(prod);
    const Surd tan_theta = Surd(alpha) / gamma;
    return HyperbolicSecantClass{gamma, r, k, tan_theta, std::atan(tan_theta.to_double())};
  }

  // beta < 0
  const Rat n = -t / beta;
  const Rat c = -alpha * alpha / beta;
  const Surd root = Surd::sqrt(c / (4 + c));
  const Surd half(Rat(1, 2));
  const Surd prob = half * (Surd(1) - root);
  const Surd prob_alt = half * (Surd(1) + root);
  const Surd scale = Surd::sqrt(dv.Delta);
  return BinomialClass{n,     c, prob, scale, Surd(p.alpha0) - scale * Surd(n) * prob, prob_alt, -scale,
                       Surd(p.alpha0) + scale * Surd(n) * prob_alt};
}

MomentSeq binomial_moments(const BinomialClass& cls, std::size_t M, int branch) {
  const Surd& prob = branch == 0 ? cls.p : cls.p_alt;
  const Surd& scale = branch == 0 ? cls.scale : cls.scale_alt;
  const Surd& shift = branch == 0 ? cls.shift : cls.shift_alt;
  const auto n = static_cast<std::size_t>(boost::multiprecision::numerator(cls.n).convert_to<unsigned long>());
  std::vector<Surd> mu(M + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const Surd weight = Surd(binomial(n, k)) * ipow(prob, k) * ipow(Surd(1) - prob, n - k);
    const Surd point = scale * Surd(static_cast<long>(k)) + shift;
    Surd power(1);
    for (std::size_t m = 0; m <= M; ++m) {
      mu[m] += weight * power;
      power *= point;
    }
  }
  return to_moments(mu);
}

MomentSeq distribution_moments(const MeixnerClass& cls, std::size_t M) {
  return std::visit(
      overloaded{
          [M](const GaussianClass& g) {
            // Central moments var^{m/2} (m-1)!! for even m.
            std::vector<Rat> central(M + 1);
            Rat value = 1;
            for (std::size_t m = 0; m <= M; m += 2) {
              central[m] = value;
              value *= g.variance * static_cast<long>(m + 1);
            }
            return to_moments(affine_moments<Rat>(central, Rat(1), g.mean));
          },
          [M](const PoissonClass& c) {
            std::vector<Rat> fm(M + 1);
            for (std::size_t j = 0; j <= M; ++j) fm[j] = ipow(c.lambda, j);
            return to_moments(affine_moments<Rat>(from_factorial_moments(fm), c.scale, c.shift));
          },
          [M](const PascalClass& c) {
            // E[(Y)_j] = r (r+1) .. (r+j-1) ((1-p)/p)^j
            const Surd odds = (Surd(1) - c.p) / c.p;
            std::vector<Surd> fm(M + 1);
            Surd rising(1);
            for (std::size_t j = 0; j <= M; ++j) {
              fm[j] = rising * ipow(odds, j);
              rising *= Surd(c.r + static_cast<long>(j));
            }
            return to_moments(affine_moments<Surd>(from_factorial_moments(fm), c.scale, c.shift));
          },
          [M](const GammaClass& c) {
            std::vector<Rat> mu(M + 1);
            Rat rising = 1;
            for (std::size_t m = 0; m <= M; ++m) {
              mu[m] = rising;
              rising *= c.shape + static_cast<long>(m);
            }
            return to_moments(affine_moments<Rat>(mu, c.scale, c.shift));
          },
          [](const HyperbolicSecantClass&) -> MomentSeq {
            throw Unsupported("hyperbolic secant moments have no exact route; use the recurrence moments");
          },
          [M](const BinomialClass& c) { return binomial_moments(c, M, 0); },
      },
      cls);
}

VerifyReport crosscheck(const MeixnerParams& p, std::size_t M) {
  const MeixnerClass cls = classify(p);
  const MomentSeq from_recurrence = moments_from_sj(szego_jacobi(p), M);
  std::vector<MomentSeq> expected{distribution_moments(cls, M)};
  if (const auto* b = std::get_if<BinomialClass>(&cls)) expected.push_back(binomial_moments(*b, M, 1));

  VerifyReport r;
  r.identity = "recurrence moments = " + class_name(cls) + " moments";
  r.max_checked_degree = static_cast<long>(M);
  for (const MomentSeq& e : expected) {
    for (std::size_t m = 0; m <= M; ++m) {
      if (from_recurrence[m] == e[m]) continue;
      r.pass = false;
      if (!r.first_failure || m < *r.first_failure) {
        r.first_failure = m;
        r.residual = Poly::constant(from_recurrence[m] - e[m]);
      }
      break;
    }
  }
  return r;
}

VerifyReport binomial_support_check(const MeixnerParams& p) {
  validate(p);
  if (p.beta >= 0) throw std::invalid_argument("binomial_support_check needs beta < 0");
  const std::size_t n = *derived(p).support_bound - 1;
  const MomentSeq mu = moments_from_sj(szego_jacobi(p), 2 * (n + 1));
  const HankelStatus status = hankel_check(mu, n + 1);
  VerifyReport r;
  r.identity = "Hankel matrix singular first at order n + 1 = " + std::to_string(n + 1);
  r.max_checked_degree = static_cast<long>(2 * (n + 1));
  if (status.kind != HankelStatus::Kind::degenerate || status.index != n + 1) {
    r.pass = false;
    r.first_failure = status.index;
  }
  return r;
}

}  // namespace meixner
