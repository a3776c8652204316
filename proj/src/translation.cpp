#include "meixner/translation.hpp"

#include "meixner/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace meixner {

namespace {

constexpr MeixnerOp kAllOps[] = {MeixnerOp::U,  MeixnerOp::V,      MeixnerOp::N,
                                 MeixnerOp::a0, MeixnerOp::aminus, MeixnerOp::aplus};

using Complex = std::complex<double>;

Complex lift_complex(const Rat& r) { return Complex(to_double(r), 0.0); }

}  // namespace

bool TranslationReport::all_pass() const {
  return std::all_of(agreement.begin(), agreement.end(), [](const auto& a) { return a.pass; });
}

TranslationReport translation_form(const MeixnerParams& p, TranslationReport::Mode mode, std::size_t max_degree) {
  validate(p);
  const Rat Delta = derived(p).Delta;
  TranslationReport report{mode, std::nullopt, std::nullopt, {}};

  if (mode == TranslationReport::Mode::exact_if_square) {
    const auto delta = exact_sqrt(Delta);
    if (!delta) {
      throw NotASquare("Delta = " + to_string(Delta) +
                       " has no rational square root; use numeric mode or the Delta-power series");
    }
    report.exact = build_translation_forms<Rat>(p, *delta, [](const Rat& r) { return r; });
    for (MeixnerOp op : kAllOps) {
      TranslationAgreement a{op, true, max_degree, 0.0, std::nullopt};
      for (std::size_t m = 0; m <= max_degree; ++m) {
        const Poly xm = Poly::monomial(m);
        if (report.exact->get(op).apply(xm) != apply_pmd(closed_form(op, p, m), xm)) {
          a.pass = false;
          a.first_failure = m;
          break;
        }
      }
      report.agreement.push_back(a);
    }
    return report;
  }

  const Complex delta = Delta == 0 ? Complex(0.0, 0.0) : std::sqrt(lift_complex(Delta));
  report.numeric = build_translation_forms<Complex>(p, delta, lift_complex);
  for (MeixnerOp op : kAllOps) {
    TranslationAgreement a{op, true, max_degree, 0.0, std::nullopt};
    for (std::size_t m = 0; m <= max_degree; ++m) {
      const Polynomial<Complex> xm = Polynomial<Complex>::monomial(m);
      const Polynomial<Complex> lhs = report.numeric->get(op).apply(xm);
      const Polynomial<Complex> rhs =
          convert<Complex>(apply_pmd(closed_form(op, p, m), Poly::monomial(m)), lift_complex);
      double scale = 1.0;
      for (const auto& c : rhs.coeffs()) scale = std::max(scale, std::abs(c));
      const std::size_t len = std::max(lhs.size(), rhs.size());
      for (std::size_t i = 0; i < len; ++i) {
        a.max_deviation = std::max(a.max_deviation, std::abs(lhs.coeff(i) - rhs.coeff(i)) / scale);
      }
      if (a.max_deviation > 1e-9 && a.pass) {
        a.pass = false;
        a.first_failure = m;
      }
    }
    report.agreement.push_back(a);
  }
  return report;
}

TranslationCombo TranslationCombo::parse(const std::string& text) {
  TranslationCombo combo;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("combo term '" + item + "' is not of the form c:d");
    }
    combo.terms.emplace_back(parse_rat(item.substr(0, colon)), parse_rat(item.substr(colon + 1)));
  }
  if (combo.terms.empty()) throw std::invalid_argument("empty translation combination");
  return combo;
}

TranslationOperator<Rat> TranslationCombo::to_operator() const {
  TranslationOperator<Rat> op;
  for (const auto& [c, d] : terms) op += c * TranslationOperator<Rat>::translate(d);
  return op;
}

std::string to_string(const TranslationCombo& combo) {
  std::string out;
  for (const auto& [c, d] : combo.terms) {
    if (!out.empty()) out += ",";
    out += to_string(c) + ":" + to_string(d);
  }
  return out;
}

}  // namespace meixner
