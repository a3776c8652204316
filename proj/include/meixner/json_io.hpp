// JSON encodings of the library's value types. Rationals are strings "p/q"
// (or "p"), polynomials are arrays of coefficients from the constant term up.
#pragma once

#include "meixner/characterize.hpp"
#include "meixner/classify.hpp"
#include "meixner/meixner.hpp"
#include "meixner/operator_algebra.hpp"
#include "meixner/pmd.hpp"
#include "meixner/surd.hpp"
#include "meixner/translation.hpp"

#include <json.hpp>

namespace meixner {

using Json = nlohmann::ordered_json;

Json to_json(const Rat& r);
Json to_json(const Poly& p);
Json to_json(const MomentSeq& mu);
/// {"N", "band": [lo, hi], "margin", "closed", "entries": rows of Rat strings}
Json to_json(const GradedOp& op);
/// {"k", "coeffs": [Poly...]}
Json to_json(const PMDecomp& p);
Json to_json(const MeixnerParams& p);
/// Rational values as a Rat string, otherwise
/// {"rational", "coefficient", "radicand", "decimal"} for rational + coefficient*sqrt(radicand).
Json to_json(const Surd& s);
/// {"class": name, ...exact parameters}
Json to_json(const MeixnerClass& cls);
Json to_json(const VerifyReport& r);
/// [{"c", "d"}...]
Json to_json(const TranslationCombo& combo);
Json to_json(const ComboValidity& v);
Json to_json(const BoundCert& cert);

// Decoders throw std::invalid_argument on malformed input.
Rat rat_from_json(const Json& j);
Poly poly_from_json(const Json& j);
MomentSeq moments_from_json(const Json& j);
GradedOp graded_op_from_json(const Json& j);
PMDecomp pmd_from_json(const Json& j);
MeixnerParams params_from_json(const Json& j);

}  // namespace meixner
