#include "meixner/errors.hpp"
#include "meixner/meixner.hpp"
#include "meixner/orthopoly.hpp"
#include "meixner/random_params.hpp"

#include <doctest.h>

#include "oracles.hpp"

using namespace meixner;

namespace {

const Poly X = Poly::x();
Poly c(long v) { return Poly::constant(Rat(v)); }

SzegoJacobi gaussian() { return szego_jacobi({Rat(0), Rat(0), Rat(0), Rat(1)}); }
SzegoJacobi poisson() { return szego_jacobi({Rat(1), Rat(1), Rat(0), Rat(1)}); }
SzegoJacobi binomial_sj() { return szego_jacobi({Rat(0), Rat(0), Rat(-1), Rat(2)}); }

MomentSeq moments(std::vector<Rat> v) { return MomentSeq{std::move(v)}; }

}  // namespace

TEST_CASE("monic polynomials from the recurrence") {
  const auto g = monic_polys(gaussian(), 3);
  REQUIRE(g.size() == 4);
  CHECK(g[0] == c(1));
  CHECK(g[1] == X);
  CHECK(g[2] == X * X - c(1));
  CHECK(g[3] == Poly::monomial(3) - Rat(3) * X);

  CHECK(monic_polys(poisson(), 0) == std::vector<Poly>{c(1)});
  const auto p = monic_polys(poisson(), 2);
  CHECK(p[1] == X - c(1));
  CHECK(p[2] == X * X - Rat(3) * X + c(1));
}

TEST_CASE("truncation beyond a finite support throws") {
  CHECK_NOTHROW(monic_polys(binomial_sj(), 2));
  CHECK_THROWS_AS(monic_polys(binomial_sj(), 3), TruncationBeyondSupport);
}

TEST_CASE("moments from the Jacobi matrix") {
  CHECK(moments_from_sj(gaussian(), 6).moments ==
        std::vector<Rat>{1, 0, 1, 0, 3, 0, 15});
  CHECK(moments_from_sj(poisson(), 8).moments == oracle::bell_numbers(8));
  CHECK(moments_from_sj(gaussian(), 0).moments == std::vector<Rat>{1});

  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const MeixnerParams p = draw_params(rng);
    CHECK(moments_from_sj(szego_jacobi(p), 1)[1] == p.alpha0);
  }
}

TEST_CASE("finite support moments are those of the three-point law") {
  // omega = (2, 2, 0): the law of 2Y - 2 with Y ~ Binomial(2, 1/2).
  const MomentSeq mu = moments_from_sj(binomial_sj(), 8);
  CHECK(mu.moments == oracle::binomial_moments(2, Rat(1, 2), Rat(2), Rat(-2), 8));
}

TEST_CASE("Gram-Schmidt recovers the recurrence") {
  const GramSchmidtResult g = gram_schmidt_from_moments(moments({1, 0, 1, 0, 3, 0, 15}), 3);
  CHECK(g.alpha == std::vector<Rat>{0, 0, 0});
  CHECK(g.omega == std::vector<Rat>{0, 1, 2, 3});
  CHECK_FALSE(g.support_bound.has_value());

  const GramSchmidtResult point = gram_schmidt_from_moments(moments({1, 0, 0, 0, 0}), 2);
  CHECK(point.support_bound == std::optional<std::size_t>(1));
  REQUIRE(point.polys.size() == 2);
  CHECK(point.polys[0] == c(1));
  CHECK(point.polys[1] == X);

  const GramSchmidtResult p = gram_schmidt_from_moments(MomentSeq{oracle::bell_numbers(6)}, 2);
  CHECK(p.alpha == std::vector<Rat>{1, 2, 3});
  CHECK(p.omega == std::vector<Rat>{0, 1, 2});
}

TEST_CASE("Gram-Schmidt rejects bad input") {
  CHECK_THROWS_AS(gram_schmidt_from_moments(moments({1, 0, 1}), 2), InvalidMoments);
  CHECK_THROWS_AS(gram_schmidt_from_moments(moments({2, 0, 1}), 1), InvalidMoments);
  CHECK_THROWS_AS(gram_schmidt_from_moments(moments({1, 0, -1}), 1), InvalidMoments);
}

TEST_CASE("Hankel screening") {
  CHECK(hankel_check(moments_from_sj(gaussian(), 6), 3).kind == HankelStatus::Kind::positive);
  const HankelStatus point = hankel_check(moments({1, 0, 0, 0, 0}), 2);
  CHECK(point.kind == HankelStatus::Kind::degenerate);
  CHECK(point.index == 1);
  CHECK(hankel_check(moments({1, 0, -1}), 1).kind == HankelStatus::Kind::invalid);
  CHECK_THROWS_AS(hankel_check(moments({1, 0}), 1), std::out_of_range);

  const HankelStatus finite = hankel_check(moments_from_sj(binomial_sj(), 8), 4);
  CHECK(finite.kind == HankelStatus::Kind::degenerate);
  CHECK(finite.index == 3);
}

TEST_CASE("determinant") {
  Matrix<Rat> m(3, 3);
  m << Rat(0), Rat(1), Rat(2), Rat(1), Rat(0), Rat(3), Rat(4), Rat(-3), Rat(8);
  CHECK(determinant(m) == -2);
}

TEST_CASE("orthogonality, round trip and shift covariance over random parameters") {
  Rng rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    const MeixnerParams p = draw_params(rng);
    const SzegoJacobi sj = szego_jacobi(p);
    const std::size_t N = effective_truncation(sj, 6);
    const auto f = monic_polys(sj, N);
    const MomentSeq mu = moments_from_sj(sj, 2 * N + 2);

    Rat norm = 1;
    for (std::size_t n = 0; n <= N; ++n) {
      if (n > 0) norm *= sj.omega(n);
      CHECK(moment_functional(mu, f[n] * f[n]) == norm);
      for (std::size_t m = 0; m < n; ++m) CHECK(moment_functional(mu, f[m] * f[n]) == 0);
    }

    const GramSchmidtResult gs = gram_schmidt_from_moments(moments_from_sj(sj, 12), 6);
    const std::size_t stop = sj.support_bound ? std::min<std::size_t>(6, *sj.support_bound) : 6;
    for (std::size_t n = 0; n < stop; ++n) CHECK(gs.alpha[n] == sj.alpha(n));
    for (std::size_t n = 1; n <= stop; ++n) CHECK(gs.omega[n] == sj.omega(n));

    // alpha_n + 1 shifts the variable by 1.
    MeixnerParams shifted = p;
    shifted.alpha0 += 1;
    CHECK(moments_from_sj(szego_jacobi(shifted), 8) == shift_moments(moments_from_sj(sj, 8), Rat(1)));
  }
}

TEST_CASE("tabulated recurrences") {
  const SzegoJacobi sj = SzegoJacobi::from_tables({Rat(0), Rat(0)}, {Rat(0), Rat(1)}, 2);
  CHECK(sj.closed_at(1));
  CHECK(moments_from_sj(sj, 4).moments == std::vector<Rat>{1, 0, 1, 0, 1});
  CHECK_THROWS_AS(sj.alpha(5), std::out_of_range);
}
