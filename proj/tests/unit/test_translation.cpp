#include "meixner/errors.hpp"
#include "meixner/meixner.hpp"
#include "meixner/random_params.hpp"
#include "meixner/translation.hpp"

#include <doctest.h>

using namespace meixner;

namespace {

using Op = TranslationOperator<Rat>;
const Poly X = Poly::x();

MeixnerParams params(const Rat& alpha, const Rat& alpha0, const Rat& beta, const Rat& t) {
  return {alpha, alpha0, beta, t};
}

/// a+ = X - a- - a0 written directly with the even part T_d + T_-d - k I.
Op aplus_with_even(const MeixnerParams& p, const Rat& delta, long k) {
  const Rat dd = delta * delta;
  const Rat tau = derived(p).tau;
  const Op I = Op::identity();
  const Op odd = Op::translate(delta) - Op::translate(-delta);
  const Op even = Op::translate(delta) + Op::translate(-delta) - Rat(k) * I;
  const Op N = (Rat(1, 2) / delta) * Poly::linear(1, -p.alpha0) * odd - (Rat(1, 2) / dd) * Poly::linear(p.alpha, tau) * even;
  const Op a0 = p.alpha * N + p.alpha0 * I;
  const Op aminus = (p.t / (2 * delta)) * odd + ((p.alpha0 * dd + p.alpha * tau) / (4 * dd)) * even +
                    Poly::linear(p.beta / dd, 0) * even;
  return X * I - aminus - a0;
}

bool agrees_with_series(const Op& op, const MeixnerParams& p, MeixnerOp which, std::size_t M) {
  for (std::size_t m = 0; m <= M; ++m) {
    const Poly f = Poly::monomial(m);
    if (op.apply(f) != apply_pmd(closed_form(which, p, m), f)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("delta momentum") {
  CHECK(delta_momentum(Rat(1)).apply(X * X) == Poly::linear(2, 1));
  CHECK(delta_momentum(Rat(0)).apply(X * X) == Poly::linear(2, 0));
  CHECK(delta_momentum(Rat(-2)).apply(Poly::monomial(3)) == Poly({Rat(4), Rat(-6), Rat(3)}));
  CHECK(Op::translate(Rat(1, 2)).apply(X) == Poly::linear(1, Rat(1, 2)));
}

TEST_CASE("translation operators combine like terms") {
  const Op a = Op::translate(Rat(1)) - Op::translate(Rat(1));
  CHECK(a.terms().empty());
  const Op b = Op::identity() + Op::identity();
  REQUIRE(b.terms().size() == 1);
  CHECK(b.terms()[0].coeff == Poly::constant(2));
}

TEST_CASE("exact translation forms agree with the series") {
  const TranslationReport r = translation_form(params(0, 0, -1, 2), TranslationReport::Mode::exact_if_square, 10);
  REQUIRE(r.exact.has_value());
  CHECK(r.exact->delta == 2);
  CHECK(r.agreement.size() == 6);
  CHECK(r.all_pass());

  CHECK(translation_form(params(3, 0, 2, 2), TranslationReport::Mode::exact_if_square, 10).all_pass());
  CHECK(translation_form(params(2, 1, 1, 1), TranslationReport::Mode::exact_if_square, 10).all_pass());
  CHECK(translation_form(params(1, 1, 0, 1), TranslationReport::Mode::exact_if_square, 10).all_pass());
}

TEST_CASE("exact mode needs a square Delta") {
  CHECK_THROWS_AS(translation_form(params(2, 0, Rat(1, 2), 1), TranslationReport::Mode::exact_if_square),
                  NotASquare);
  CHECK_THROWS_AS(translation_form(params(0, 0, 1, 1), TranslationReport::Mode::exact_if_square), NotASquare);
}

TEST_CASE("numeric mode covers every Delta") {
  for (const MeixnerParams& p : {params(0, 0, 1, 1), params(1, 0, 1, 2), params(2, 0, Rat(1, 2), 1),
                                 params(0, 0, -1, 2)}) {
    const TranslationReport r = translation_form(p, TranslationReport::Mode::numeric, 10);
    CAPTURE(to_string(p));
    CHECK(r.numeric.has_value());
    CHECK(r.all_pass());
    for (const auto& a : r.agreement) CHECK(a.max_deviation <= 1e-9);
  }
}

TEST_CASE("exact forms over random square Delta draws") {
  Rng rng(77);
  int tested = 0;
  for (int trial = 0; trial < 200 && tested < 15; ++trial) {
    const MeixnerParams p = draw_params(rng);
    if (!exact_sqrt(derived(p).Delta)) continue;
    ++tested;
    CAPTURE(to_string(p));
    CHECK(translation_form(p, TranslationReport::Mode::exact_if_square, 10).all_pass());
  }
  CHECK(tested == 15);
}

TEST_CASE("the creation form needs -2I in its even part") {
  const MeixnerParams p = params(3, 0, 2, 2);
  CHECK(agrees_with_series(aplus_with_even(p, Rat(1), 2), p, MeixnerOp::aplus, 8));
  CHECK_FALSE(agrees_with_series(aplus_with_even(p, Rat(1), 1), p, MeixnerOp::aplus, 8));
}

TEST_CASE("combination parsing") {
  const TranslationCombo combo = TranslationCombo::parse("1:1, -2:0,1:-1");
  REQUIRE(combo.terms.size() == 3);
  CHECK(combo.terms[1] == std::pair<Rat, Rat>{Rat(-2), Rat(0)});
  CHECK(TranslationCombo::parse(to_string(combo)) == combo);
  CHECK(TranslationCombo::parse("1/2:3/4").terms[0].second == Rat(3, 4));
  CHECK_THROWS_AS(TranslationCombo::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(TranslationCombo::parse("1"), std::invalid_argument);
  CHECK_THROWS_AS(TranslationCombo::parse("a:1"), std::invalid_argument);
  CHECK_THROWS_AS(TranslationCombo::parse("1:1,,-1:0"), std::invalid_argument);
}

TEST_CASE("a combination acts as its translations") {
  const TranslationCombo combo = TranslationCombo::parse("1:1,-1:0");
  CHECK(combo.to_operator().apply(X * X) == Poly::linear(2, 1));
}

TEST_CASE("the sign of delta does not matter") {
  const MeixnerParams p = params(3, 1, 2, 2);
  const auto lift = [](const Rat& r) { return r; };
  const auto plus = build_translation_forms(p, Rat(1), lift);
  const auto minus = build_translation_forms(p, Rat(-1), lift);
  for (MeixnerOp op : {MeixnerOp::U, MeixnerOp::V, MeixnerOp::N, MeixnerOp::a0, MeixnerOp::aminus, MeixnerOp::aplus}) {
    CAPTURE(to_string(op));
    CHECK(agrees_with_series(plus.get(op), p, op, 8));
    CHECK(agrees_with_series(minus.get(op), p, op, 8));
  }
}
