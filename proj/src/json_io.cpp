#include "meixner/json_io.hpp"

#include <stdexcept>

namespace meixner {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const Rat& r) { return to_string(r); }

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const Rat& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const MomentSeq& mu) {
  Json out = Json::array();
  for (const Rat& m : mu.moments) out.push_back(to_json(m));
  return out;
}

Json to_json(const GradedOp& op) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < op.entries().rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < op.entries().cols(); ++c) row.push_back(to_json(op.entries()(r, c)));
    rows.push_back(std::move(row));
  }
  Json out;
  out["N"] = op.truncation();
  out["band"] = {op.band().lo, op.band().hi};
  out["margin"] = op.margin();
  out["closed"] = op.closed();
  out["entries"] = std::move(rows);
  return out;
}

Json to_json(const PMDecomp& p) {
  Json coeffs = Json::array();
  for (const Poly& c : p.coeffs) coeffs.push_back(to_json(c));
  Json out;
  out["k"] = p.k;
  out["coeffs"] = std::move(coeffs);
  return out;
}

Json to_json(const MeixnerParams& p) {
  Json out;
  out["alpha"] = to_json(p.alpha);
  out["alpha0"] = to_json(p.alpha0);
  out["beta"] = to_json(p.beta);
  out["t"] = to_json(p.t);
  return out;
}

Json to_json(const Surd& s) {
  if (s.is_rational()) return to_json(s.rational_part());
  Json out;
  out["rational"] = to_json(s.rational_part());
  out["coefficient"] = to_json(s.irrational_part());
  out["radicand"] = to_json(s.radicand());
  out["decimal"] = s.to_double();
  return out;
}

Json to_json(const MeixnerClass& cls) {
  Json out;
  out["class"] = class_name(cls);
  std::visit(overloaded{
                 [&](const GaussianClass& g) {
                   out["mean"] = to_json(g.mean);
                   out["variance"] = to_json(g.variance);
                 },
                 [&](const PoissonClass& c) {
                   out["lambda"] = to_json(c.lambda);
                   out["scale"] = to_json(c.scale);
                   out["shift"] = to_json(c.shift);
                 },
                 [&](const PascalClass& c) {
                   out["d"] = to_json(c.d);
                   out["p"] = to_json(c.p);
                   out["r"] = to_json(c.r);
                   out["scale"] = to_json(c.scale);
                   out["shift"] = to_json(c.shift);
                 },
                 [&](const GammaClass& c) {
                   out["shape"] = to_json(c.shape);
                   out["scale"] = to_json(c.scale);
                   out["shift"] = to_json(c.shift);
                 },
                 [&](const HyperbolicSecantClass& c) {
                   out["gamma"] = to_json(c.gamma);
                   out["r"] = to_json(c.r);
                   out["k"] = to_json(c.k);
                   out["theta"] = {{"tan", to_json(c.tan_theta)}, {"decimal", c.theta}};
                   out["normalization"] = "c";
                 },
                 [&](const BinomialClass& c) {
                   out["n"] = to_json(c.n);
                   out["c"] = to_json(c.c);
                   out["p"] = to_json(c.p);
                   out["scale"] = to_json(c.scale);
                   out["shift"] = to_json(c.shift);
                   out["alternate"] = {{"p", to_json(c.p_alt)},
                                       {"scale", to_json(c.scale_alt)},
                                       {"shift", to_json(c.shift_alt)}};
                 },
             },
             cls);
  return out;
}

Json to_json(const VerifyReport& r) {
  Json out;
  out["identity"] = r.identity;
  out["pass"] = r.pass;
  out["max_checked_degree"] = r.max_checked_degree;
  if (r.first_failure) out["first_failure"] = *r.first_failure;
  if (r.residual) out["residual"] = to_json(*r.residual);
  return out;
}

Json to_json(const TranslationCombo& combo) {
  Json out = Json::array();
  for (const auto& [c, d] : combo.terms) out.push_back({{"c", to_json(c)}, {"d", to_json(d)}});
  return out;
}

Json to_json(const ComboValidity& v) {
  Json issues = Json::array();
  for (const ComboIssue& i : v.issues) {
    issues.push_back({{"kind", to_string(i.kind)}, {"term", i.index}, {"message", i.message}});
  }
  return {{"valid", v.valid()}, {"issues", std::move(issues)}};
}

Json to_json(const BoundCert& cert) {
  Json out;
  out["k"] = to_json(cert.k);
  out["A"] = to_json(cert.A);
  out["checked_up_to"] = cert.checked_up_to;
  out["pass"] = cert.pass;
  if (cert.first_violation) out["first_violation"] = *cert.first_violation;
  return out;
}

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a coefficient array, got " + j.dump());
  std::vector<Rat> c;
  for (const Json& e : j) c.push_back(rat_from_json(e));
  return Poly(std::move(c));
}

MomentSeq moments_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a moment array, got " + j.dump());
  MomentSeq mu;
  for (const Json& e : j) mu.moments.push_back(rat_from_json(e));
  return mu;
}

GradedOp graded_op_from_json(const Json& j) {
  const auto N = field(j, "N").get<std::size_t>();
  const Json& band = field(j, "band");
  const Json& rows = field(j, "entries");
  if (!band.is_array() || band.size() != 2) throw std::invalid_argument("band must be [lo, hi]");
  if (!rows.is_array() || rows.size() != N + 1) throw std::invalid_argument("entries must have N + 1 rows");
  const auto n = static_cast<Eigen::Index>(N + 1);
  Matrix<Rat> m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const Json& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != N + 1) throw std::invalid_argument("entries must be square");
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = rat_from_json(row[static_cast<std::size_t>(c)]);
  }
  const bool closed = j.contains("closed") && j.at("closed").get<bool>();
  return GradedOp(std::move(m), Band{band[0].get<int>(), band[1].get<int>()}, field(j, "margin").get<std::size_t>(),
                  closed);
}

PMDecomp pmd_from_json(const Json& j) {
  std::vector<Poly> coeffs;
  for (const Json& c : field(j, "coeffs")) coeffs.push_back(poly_from_json(c));
  return PMDecomp(field(j, "k").get<int>(), std::move(coeffs));
}

MeixnerParams params_from_json(const Json& j) {
  return MeixnerParams{rat_from_json(field(j, "alpha")), rat_from_json(field(j, "alpha0")),
                       rat_from_json(field(j, "beta")), rat_from_json(field(j, "t"))};
}

}  // namespace meixner
