#include "meixner/characterize.hpp"
#include "meixner/errors.hpp"
#include "meixner/random_params.hpp"

#include <doctest.h>

#include "oracles.hpp"

using namespace meixner;

namespace {

using Kind = ComboIssue::Kind;

TranslationCombo combo(const std::string& text) { return TranslationCombo::parse(text); }

std::vector<Kind> kinds(const TranslationCombo& c) {
  std::vector<Kind> out;
  for (const auto& issue : validate_combo(c).issues) out.push_back(issue.kind);
  return out;
}

/// Moments of a*Y + b for Y ~ Poisson(lambda), expanded binomially.
std::vector<Rat> affine_poisson(const Rat& lambda, const Rat& a, const Rat& b, std::size_t M) {
  const std::vector<Rat> y = oracle::poisson_moments(lambda, M);
  std::vector<Rat> out;
  for (std::size_t m = 0; m <= M; ++m) {
    Rat s = 0;
    for (std::size_t j = 0; j <= m; ++j) s += binomial(m, j) * ipow(a, j) * y[j] * ipow(b, m - j);
    out.push_back(s);
  }
  return out;
}

/// Moments of the sum of independent variables.
std::vector<Rat> convolve(const std::vector<Rat>& x, const std::vector<Rat>& y) {
  std::vector<Rat> out;
  for (std::size_t m = 0; m < x.size(); ++m) {
    Rat s = 0;
    for (std::size_t j = 0; j <= m; ++j) s += binomial(m, j) * x[j] * y[m - j];
    out.push_back(s);
  }
  return out;
}

/// sum_i d_i Y_i - sum_i c_i with Y_i ~ Poisson(c_i/d_i) independent.
std::vector<Rat> poisson_sum_moments(const TranslationCombo& c, std::size_t M) {
  std::vector<Rat> out(M + 1, Rat(0));
  out[0] = 1;
  for (const auto& [ci, di] : c.terms) {
    if (di == 0) continue;
    out = convolve(out, affine_poisson(ci / di, di, -ci, M));
  }
  return out;
}

}  // namespace

TEST_CASE("combination validity") {
  CHECK(validate_combo(combo("1:1,-1:0")).valid());
  CHECK(validate_combo(combo("1:1,1:-1,-2:0")).valid() == false);
  CHECK(kinds(combo("1:1,-1:2")) == std::vector<Kind>{Kind::NegativeMean});
  CHECK(kinds(combo("1:1,1:0")) == std::vector<Kind>{Kind::SumNotZero});
  CHECK(kinds(combo("1:1,-1:1")) == std::vector<Kind>{Kind::DuplicateShift, Kind::NegativeMean});
  CHECK(kinds(combo("0:0")) == std::vector<Kind>{Kind::ZeroCoefficient});
  CHECK(kinds(TranslationCombo{}) == std::vector<Kind>{Kind::Empty});
  CHECK(validate_combo(combo("1:1,-1:2")).issues[0].index == 1);
  CHECK(validate_combo(combo("1:1,1:0")).issues[0].message.rfind("SumNotZero", 0) == 0);
  CHECK_THROWS_AS(require_valid(combo("1:1,1:0")), InvalidCombo);
  CHECK_NOTHROW(require_valid(combo("1:1,-1:0")));
}

TEST_CASE("moment recursion") {
  CHECK(moments_via_recursion(combo("1:1,-1:0"), 6).moments == std::vector<Rat>{1, 0, 1, 1, 4, 11, 41});
  const MomentSeq two = moments_via_recursion(combo("2:1,-2:0"), 4);
  CHECK(two[2] == 2);
  CHECK(two[3] == 2);
  CHECK(two[4] == 14);
  CHECK(moments_via_recursion(combo("1:1,-1:0"), 0).moments == std::vector<Rat>{1});
  CHECK_THROWS_AS(moments_via_recursion(combo("1:1,1:0"), 4), InvalidCombo);
}

TEST_CASE("cumulants") {
  const CumulantSeq k = combo_cumulants(combo("1:1,-1:0"), 5);
  CHECK(k.kappas == std::vector<Rat>{0, 0, 1, 1, 1, 1});
  const CumulantSeq s = combo_cumulants(combo("1:1,-2:0,1:-1"), 4);
  CHECK(s.kappas == std::vector<Rat>{0, 0, 0, 2, 0});
  const CumulantSeq m = combo_cumulants(combo("3:3,-3:0"), 4);
  CHECK(m.kappas == std::vector<Rat>{0, 0, 9, 27, 81});
}

TEST_CASE("the Poisson building block tends to the Gaussian") {
  // c = n, d = 1/n keeps kappa_2 = 1 and sends kappa_m = n^{2-m} to zero.
  Rat previous3 = 2, previous4 = 2;
  for (long n = 1; n <= 8; ++n) {
    const TranslationCombo c{{{Rat(n), Rat(1, n)}, {Rat(-n), Rat(0)}}};
    const CumulantSeq k = combo_cumulants(c, 4);
    CHECK(k.kappas[2] == 1);
    CHECK(k.kappas[3] < previous3);
    CHECK(k.kappas[4] < previous4);
    previous3 = k.kappas[3];
    previous4 = k.kappas[4];
    CHECK(moments_via_cumulants(c, 4)[4] == 3 + Rat(1, n * n));
  }
}

TEST_CASE("three moment routes and the Poisson sum agree") {
  CHECK(laplace_series(combo("1:1,-1:0"), 6).moments == std::vector<Rat>{1, 0, 1, 1, 4, 11, 41});
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const TranslationCombo c = draw_combo(rng);
    CAPTURE(to_string(c));
    REQUIRE(validate_combo(c).valid());
    const MomentSeq r = moments_via_recursion(c, 10);
    CHECK(r == moments_via_cumulants(c, 10));
    CHECK(r == laplace_series(c, 10));
    CHECK(r.moments == poisson_sum_moments(c, 10));
  }
}

TEST_CASE("routes ignore the sign of the Poisson means") {
  const TranslationCombo c = combo("1:1,-2:0,1:-1");
  const MomentSeq r = moments_via_recursion(c, 8);
  CHECK(r == moments_via_cumulants(c, 8));
  CHECK(r == laplace_series(c, 8));
  CHECK(r[3] == 2);
  const MomentSeq s = moments_via_recursion(combo("1:1,-1:-1"), 9);
  for (std::size_t m = 1; m <= 9; m += 2) CHECK(s[m] == 0);
}

TEST_CASE("factorial growth bound") {
  const BoundCert a = bound_cert(combo("1:1,-1:0"), 12);
  CHECK(a.A == 1);
  CHECK(a.k == 2);
  CHECK(a.pass);
  CHECK(a.checked_up_to == 12);

  const BoundCert b = bound_cert(combo("3:3,-3:0"), 20);
  CHECK(b.A == Rat(9, 2));
  CHECK(b.k == 27);
  CHECK(b.pass);
  CHECK(b.checked_up_to == 20);
  CHECK_FALSE(b.first_violation.has_value());

  const BoundCert small = bound_cert(combo("1/4:1/2,-1/4:0"), 10);
  CHECK(small.k == 1);
}

TEST_CASE("beta = 0 annihilators as translation combinations") {
  const TranslationCombo c = beta0_combo({Rat(1), Rat(0), Rat(0), Rat(1)});
  CHECK(c == combo("1:1,-1:0"));
  const TranslationCombo d = beta0_combo({Rat(2), Rat(1), Rat(0), Rat(3)});
  CHECK(d == combo("3/2:2,-3/2:0"));
  CHECK_THROWS_AS(beta0_combo({Rat(1), Rat(0), Rat(1), Rat(1)}), InvalidParams);
  CHECK_THROWS_AS(beta0_combo({Rat(0), Rat(0), Rat(0), Rat(1)}), InvalidParams);
}

TEST_CASE("the beta = 0 combination is the annihilator of the centered variable") {
  Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const MeixnerParams p{draw_rat(rng, Rat(1, 4), Rat(3)), Rat(0), Rat(0), draw_rat(rng, Rat(1, 4), Rat(3))};
    const TranslationOperator<Rat> op = beta0_combo(p).to_operator();
    for (std::size_t m = 0; m <= 8; ++m) {
      const Poly f = Poly::monomial(m);
      CHECK(op.apply(f) == apply_pmd(pmd_aminus(p, m), f));
    }
    // The centered Poisson moments follow from the same combination.
    CHECK(moments_via_recursion(beta0_combo(p), 8) == moments_from_sj(szego_jacobi(p), 8));
  }
}
