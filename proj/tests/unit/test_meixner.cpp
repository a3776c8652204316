#include "meixner/errors.hpp"
#include "meixner/meixner.hpp"
#include "meixner/random_params.hpp"

#include <doctest.h>

using namespace meixner;

namespace {

const Poly X = Poly::x();
Poly c(const Rat& v) { return Poly::constant(v); }

MeixnerParams params(const Rat& alpha, const Rat& alpha0, const Rat& beta, const Rat& t) {
  return {alpha, alpha0, beta, t};
}

constexpr MeixnerOp kOps[] = {MeixnerOp::U,  MeixnerOp::V,      MeixnerOp::N,
                              MeixnerOp::a0, MeixnerOp::aminus, MeixnerOp::aplus};

}  // namespace

TEST_CASE("recurrence coefficients") {
  const SzegoJacobi sj = szego_jacobi(params(1, 1, 0, 1));
  CHECK(sj.alpha(2) == 3);
  CHECK(sj.omega(3) == 3);
  CHECK_FALSE(sj.support_bound.has_value());

  const SzegoJacobi b = szego_jacobi(params(0, 0, -1, 2));
  CHECK(b.omega(1) == 2);
  CHECK(b.omega(2) == 2);
  CHECK(b.omega(3) == 0);
  CHECK(b.support_bound == std::optional<std::size_t>(3));

  const MeixnerDerived d = derived(params(2, 1, Rat(1, 2), 3));
  CHECK(d.Delta == 2);
  CHECK(d.tau == 4);
}

TEST_CASE("admissibility") {
  CHECK_THROWS_AS(validate(params(1, 0, 0, 0)), InvalidParams);
  CHECK_THROWS_AS(validate(params(-1, 0, 0, 1)), InvalidParams);
  CHECK_THROWS_AS(validate(params(0, 0, -1, Rat(3, 2))), InvalidParams);
  CHECK_THROWS_AS(szego_jacobi(params(0, 0, -2, 3)), InvalidParams);
  CHECK_NOTHROW(validate(params(0, 0, -2, 4)));
  CHECK(check_params(params(0, 0, -1, Rat(3, 2)))->find("3/2") != std::string::npos);
  CHECK_THROWS_AS(MeixnerParams::parse("1", "x", "0", "1"), std::invalid_argument);
  CHECK(MeixnerParams::parse("1/2", "-1", "0.25", "3") == params(Rat(1, 2), -1, Rat(1, 4), 3));
}

TEST_CASE("operator names") {
  for (MeixnerOp op : kOps) CHECK(parse_op(to_string(op)) == op);
  CHECK(to_string(MeixnerOp::aminus) == "a-");
  CHECK(faithfulness(MeixnerOp::aplus) == 1);
  CHECK(faithfulness(MeixnerOp::aminus) == -1);
  CHECK(faithfulness(MeixnerOp::N) == 0);
  CHECK_THROWS_AS(parse_op("b+"), std::invalid_argument);
}

TEST_CASE("semi-annihilation series for a finite support law") {
  const PMDecomp U = pmd_U(params(0, 0, -1, 2), 5);
  CHECK(U.coefficient(0).is_zero());
  CHECK(U.coefficient(1) == c(2));
  CHECK(U.coefficient(2) == -X);
  CHECK(U.coefficient(3) == c(Rat(4, 3)));
  CHECK(U.coefficient(4) == Rat(-1, 3) * X);
  CHECK(U.k == 0);
}

TEST_CASE("semi-annihilation coefficients follow the two-step recursion") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const MeixnerParams p = draw_params(rng);
    const Rat Delta = derived(p).Delta;
    const PMDecomp U = pmd_U(p, 12);
    for (std::size_t n = 0; n + 2 <= 12; ++n) {
      Poly base = U.coefficient(n);
      if (n == 0) base -= Rat(1, 2) * X;
      const Rat scale = Delta / static_cast<long>((n + 2) * (n + 1));
      CHECK(U.coefficient(n + 2) == scale * base);
    }
  }
}

TEST_CASE("Gaussian operators") {
  const MeixnerParams g = params(0, 0, 0, 3);
  CHECK(pmd_U(g, 6).coeffs == std::vector<Poly>{Poly{}, c(3)});
  CHECK(pmd_aminus(g, 6).coeffs == std::vector<Poly>{Poly{}, c(3)});
  CHECK(pmd_aplus(g, 6).coeffs == std::vector<Poly>{X, c(-3)});
  CHECK(pmd_number(g, 6).coeffs == std::vector<Poly>{Poly{}, X, c(-3)});
  CHECK(pmd_a0(g, 6).coeffs.empty());
  CHECK(pmd_V(g, 6).coeffs == std::vector<Poly>{X, c(-3)});
}

TEST_CASE("Poisson preservation operator") {
  const PMDecomp a0 = pmd_a0(params(1, 1, 0, 1), 4);
  CHECK(a0.coefficient(0) == c(1));
  CHECK(a0.coefficient(1) == X - c(1));
  CHECK(a0.coefficient(2) == Rat(-1, 2) * (X + c(1)));
}

TEST_CASE("vanishing Delta leaves two terms") {
  const MeixnerParams p = params(2, 1, 1, 1);
  const PMDecomp U = pmd_U(p, 10);
  CHECK(U.coeffs == std::vector<Poly>{c(Rat(1, 2)), X});
  CHECK(pmd_number(p, 10).coeffs == std::vector<Poly>{Poly{}, X - c(1), -X});
  CHECK(one_meixner_limit_check(p, 10).pass);
  CHECK_THROWS_AS(one_meixner_limit_check(params(1, 0, 0, 1), 4), std::invalid_argument);

  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) CHECK(one_meixner_limit_check(draw_params_delta_zero(rng), 12).pass);
}

TEST_CASE("a- + a0 + a+ is multiplication by X") {
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const MeixnerParams p = draw_params(rng);
    const PMDecomp sum = pmd_aminus(p, 10) + pmd_a0(p, 10) + pmd_aplus(p, 10);
    CHECK(sum == multiplication(X));
    CHECK(pmd_U(p, 10) + pmd_V(p, 10) == multiplication(X));
  }
}

TEST_CASE("commutator of U with X") {
  const GradedOp cux = comm_UX_closed_form(params(0, 0, 0, 1), 6);
  CHECK(cux.entries() == identity_op(6).entries());
  CHECK(comm_UX_check(params(0, 0, 0, 1), 6).pass);
}

TEST_CASE("closed forms match the operator matrices over random parameters") {
  Rng rng(20);
  for (int trial = 0; trial < 20; ++trial) {
    const MeixnerParams p = draw_params(rng);
    CAPTURE(to_string(p));
    for (MeixnerOp op : kOps) CHECK(check_closed_form(op, p, 10, 10).pass);
    CHECK(comm_UX_check(p, 10).pass);
    CHECK(double_commutator_check(p, 10).pass);
  }
}

TEST_CASE("a wrong closed form is caught") {
  // Evaluate the closed form of one parameter set against the matrix of another.
  const MeixnerParams p = params(1, 0, 1, 2);
  const MeixnerParams q = params(1, 0, 1, 3);
  const SzegoJacobi sj = szego_jacobi(p);
  const MonomialOp M = to_monomial_basis(operator_matrix(MeixnerOp::U, sj, 8), sj);
  const PMDecomp extracted = extract_pmd(M.entries, 0, 6);
  CHECK(extracted == pmd_U(p, 6));
  CHECK_FALSE(extracted == pmd_U(q, 6));
}
