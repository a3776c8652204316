#include "meixner/characterize.hpp"
#include "meixner/classify.hpp"
#include "meixner/random_params.hpp"

#include <doctest.h>

#include <array>

using namespace meixner;

TEST_CASE("integer and rational draws stay in range") {
  Rng rng(1);
  for (int i = 0; i < 500; ++i) {
    const long n = draw_int(rng, -3, 4);
    CHECK(n >= -3);
    CHECK(n <= 4);
    const Rat r = draw_rat(rng, Rat(-1, 3), Rat(5, 2), 6);
    CHECK(r >= Rat(-1, 3));
    CHECK(r <= Rat(5, 2));
    CHECK(boost::multiprecision::denominator(r) <= 6);
  }
}

TEST_CASE("parameter draws are reproducible") {
  Rng a(123), b(123), c(124);
  bool differs = false;
  for (int i = 0; i < 50; ++i) {
    const MeixnerParams p = draw_params(a);
    CHECK(p == draw_params(b));
    differs = differs || !(p == draw_params(c));
  }
  CHECK(differs);
}

TEST_CASE("parameter draws are admissible and reach every class") {
  Rng rng(2);
  std::array<int, 6> seen{};
  for (int i = 0; i < 300; ++i) {
    const MeixnerParams p = draw_params(rng);
    CHECK_FALSE(check_params(p).has_value());
    ++seen[static_cast<std::size_t>(class_number(classify(p)) - 1)];
  }
  for (int count : seen) CHECK(count > 0);
}

TEST_CASE("Delta = 0 draws") {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const MeixnerParams p = draw_params_delta_zero(rng);
    CHECK(derived(p).Delta == 0);
    CHECK_FALSE(check_params(p).has_value());
  }
}

TEST_CASE("combination draws are valid") {
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const TranslationCombo c = draw_combo(rng);
    CHECK(validate_combo(c).valid());
    CHECK(c.terms.size() <= 4);
  }
}
