#include "meixner/json_io.hpp"
#include "meixner/random_params.hpp"

#include <doctest.h>

using namespace meixner;

namespace {

const Poly X = Poly::x();

}  // namespace

TEST_CASE("scalar and polynomial encodings") {
  CHECK(to_json(Rat(-3, 6)) == Json("-1/2"));
  CHECK(to_json(Rat(4)) == Json("4"));
  CHECK(to_json(X * X - Rat(1, 3) * X).dump() == R"(["0","-1/3","1"])");
  CHECK(to_json(Poly{}).dump() == "[]");
  CHECK(to_json(MomentSeq{{Rat(1), Rat(0), Rat(2)}}).dump() == R"(["1","0","2"])");
}

TEST_CASE("structured encodings keep their key order") {
  const Json p = to_json(MeixnerParams{Rat(1), Rat(0), Rat(1, 2), Rat(3)});
  CHECK(p.dump() == R"({"alpha":"1","alpha0":"0","beta":"1/2","t":"3"})");

  const Json d = to_json(PMDecomp(0, {Poly{}, X}));
  CHECK(d.dump() == R"({"k":0,"coeffs":[[],["0","1"]]})");

  const Json c = to_json(TranslationCombo::parse("1:1,-1:0"));
  CHECK(c.dump() == R"([{"c":"1","d":"1"},{"c":"-1","d":"0"}])");

  const Json cls = to_json(classify(MeixnerParams{Rat(1), Rat(1), Rat(0), Rat(1)}));
  CHECK(cls.dump() == R"({"class":"Poisson","lambda":"1","scale":"1","shift":"0"})");

  const Json s = to_json(Surd::sqrt(2));
  CHECK(s["rational"] == "0");
  CHECK(s["coefficient"] == "1");
  CHECK(s["radicand"] == "2");
  CHECK(s["decimal"].get<double>() == doctest::Approx(1.41421356));
  CHECK(to_json(Surd::sqrt(4)) == Json("2"));

  VerifyReport r{"x = y", false, 3, 2, X};
  CHECK(to_json(r).dump() ==
        R"({"identity":"x = y","pass":false,"max_checked_degree":3,"first_failure":2,"residual":["0","1"]})");

  const Json v = to_json(validate_combo(TranslationCombo::parse("1:1,1:0")));
  CHECK(v["valid"] == false);
  CHECK(v["issues"][0]["kind"] == "SumNotZero");
}

TEST_CASE("decoders reject malformed input") {
  CHECK(rat_from_json(Json(5)) == 5);
  CHECK_THROWS_AS(rat_from_json(Json(1.5)), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_json(Json("1/0")), std::invalid_argument);
  CHECK_THROWS_AS(poly_from_json(Json("x")), std::invalid_argument);
  CHECK_THROWS_AS(params_from_json(Json::parse(R"({"alpha":"1"})")), std::invalid_argument);
  CHECK_THROWS_AS(graded_op_from_json(Json::parse(R"({"N":1,"band":[0],"margin":0,"entries":[]})")),
                  std::invalid_argument);
}

TEST_CASE("round trips") {
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const MeixnerParams p = draw_params(rng);
    CHECK(params_from_json(to_json(p)) == p);

    const SzegoJacobi sj = szego_jacobi(p);
    const std::size_t N = effective_truncation(sj, 5);
    const QuantumOps q = quantum_ops(sj, N);
    const GradedOp back = graded_op_from_json(to_json(q.aplus));
    CHECK(back.entries() == q.aplus.entries());
    CHECK(back.band() == q.aplus.band());
    CHECK(back.margin() == q.aplus.margin());
    CHECK(back.closed() == q.aplus.closed());

    const PMDecomp u = pmd_U(p, 6);
    const PMDecomp u2 = pmd_from_json(to_json(u));
    CHECK(u2 == u);
    CHECK(u2.k == u.k);

    const MomentSeq mu = moments_from_sj(sj, 6);
    CHECK(moments_from_json(Json::parse(to_json(mu).dump())) == mu);
  }
}
