#include "meixner/meixner.hpp"

#include "meixner/errors.hpp"

#include <algorithm>

namespace meixner {

MeixnerParams MeixnerParams::parse(const std::string& alpha, const std::string& alpha0, const std::string& beta,
                                   const std::string& t) {
  return MeixnerParams{parse_rat(alpha), parse_rat(alpha0), parse_rat(beta), parse_rat(t)};
}

std::string to_string(const MeixnerParams& p) {
  return "(alpha=" + to_string(p.alpha) + ", alpha0=" + to_string(p.alpha0) + ", beta=" + to_string(p.beta) +
         ", t=" + to_string(p.t) + ")";
}

std::optional<std::string> check_params(const MeixnerParams& p) {
  if (p.t <= 0) return "t must be positive (t = " + to_string(p.t) + ")";
  if (p.alpha < 0) return "alpha must be non-negative; replace X by -X (alpha = " + to_string(p.alpha) + ")";
  if (p.beta < 0) {
    const Rat ratio = p.t / -p.beta;
    if (!is_integer(ratio)) {
      return "beta < 0 requires t/(-beta) to be a positive integer (t/(-beta) = " + to_string(ratio) + ")";
    }
  }
  return std::nullopt;
}

void validate(const MeixnerParams& p) {
  if (auto violation = check_params(p)) throw InvalidParams(*violation);
}

MeixnerDerived derived(const MeixnerParams& p) {
  MeixnerDerived d{p.alpha * p.alpha - 4 * p.beta, 2 * p.t - p.alpha * p.alpha0, std::nullopt};
  if (p.beta < 0) {
    const Rat n = p.t / -p.beta;
    d.support_bound = 1 + static_cast<std::size_t>(boost::multiprecision::numerator(n).convert_to<unsigned long>());
  }
  return d;
}

SzegoJacobi szego_jacobi(const MeixnerParams& p) {
  validate(p);
  SzegoJacobi sj;
  sj.alpha = [a = p.alpha, a0 = p.alpha0](std::size_t n) { return a * static_cast<long>(n) + a0; };
  sj.omega = [b = p.beta, t = p.t](std::size_t n) {
    const Rat nn(static_cast<long>(n));
    return b * nn * nn + (t - b) * nn;
  };
  sj.support_bound = derived(p).support_bound;
  return sj;
}

GradedOp comm_UX_closed_form(const MeixnerParams& p, std::size_t N) {
  const SzegoJacobi sj = szego_jacobi(p);
  const MeixnerDerived d = derived(p);
  const bool closed = sj.closed_at(N);
  const GradedOp X = position_op(quantum_ops(sj, N));
  return Rat(p.alpha / 2) * X - Rat(d.Delta / 2) * number_op(N, closed) + Rat(d.tau / 2) * identity_op(N, closed);
}

PMDecomp pmd_U(const MeixnerParams& p, std::size_t order) {
  validate(p);
  const MeixnerDerived d = derived(p);
  const Poly centered = Poly::linear(1, -p.alpha0);                              // X - alpha0
  const Poly odd_base = Rat(p.alpha / 2) * centered + Poly::constant(p.t);      // (alpha/2)(X - alpha0) + t
  std::vector<Poly> A(order + 1);
  A[0] = Poly::constant(p.alpha0 / 2);
  Rat delta_pow = 1;  // Delta^n
  for (std::size_t n = 0; 2 * n + 1 <= order; ++n) {
    A[2 * n + 1] = (delta_pow / factorial(2 * n + 1)) * odd_base;
    delta_pow *= d.Delta;
    if (2 * n + 2 <= order) A[2 * n + 2] = Rat(-delta_pow / (2 * factorial(2 * n + 2))) * centered;
  }
  return PMDecomp(0, std::move(A));
}

PMDecomp pmd_V(const MeixnerParams& p, std::size_t order) {
  PMDecomp v = multiplication(Poly::x()) - pmd_U(p, order);
  v.k = 1;
  return v;
}

PMDecomp pmd_number(const MeixnerParams& p, std::size_t order) {
  validate(p);
  const MeixnerDerived d = derived(p);
  const Poly centered = Poly::linear(1, -p.alpha0);       // X - alpha0
  const Poly even_base = Poly::linear(p.alpha, d.tau);    // alpha X + tau
  std::vector<Poly> A(order + 1);
  Rat delta_pow = 1;  // Delta^n
  for (std::size_t n = 0; 2 * n + 1 <= order; ++n) {
    A[2 * n + 1] = (delta_pow / factorial(2 * n + 1)) * centered;
    if (2 * n + 2 <= order) A[2 * n + 2] = Rat(-delta_pow / factorial(2 * n + 2)) * even_base;
    delta_pow *= d.Delta;
  }
  return PMDecomp(0, std::move(A));
}

PMDecomp pmd_a0(const MeixnerParams& p, std::size_t order) {
  PMDecomp a0 = p.alpha * pmd_number(p, order) + multiplication(Poly::constant(p.alpha0));
  a0.k = 0;
  return a0;
}

PMDecomp pmd_aminus(const MeixnerParams& p, std::size_t order) {
  PMDecomp am = pmd_U(p, order) - Rat(1, 2) * pmd_a0(p, order);
  am.k = -1;
  return am;
}

PMDecomp pmd_aplus(const MeixnerParams& p, std::size_t order) {
  PMDecomp ap = multiplication(Poly::x()) - pmd_aminus(p, order) - pmd_a0(p, order);
  ap.k = 1;
  return ap;
}

std::string to_string(MeixnerOp op) {
  switch (op) {
    case MeixnerOp::U: return "U";
    case MeixnerOp::V: return "V";
    case MeixnerOp::N: return "N";
    case MeixnerOp::a0: return "a0";
    case MeixnerOp::aminus: return "a-";
    case MeixnerOp::aplus: return "a+";
  }
  return "?";
}

MeixnerOp parse_op(const std::string& name) {
  for (MeixnerOp op : {MeixnerOp::U, MeixnerOp::V, MeixnerOp::N, MeixnerOp::a0, MeixnerOp::aminus, MeixnerOp::aplus}) {
    if (to_string(op) == name) return op;
  }
  throw std::invalid_argument("unknown operator '" + name + "' (expected U, V, N, a0, a-, a+)");
}

PMDecomp closed_form(MeixnerOp op, const MeixnerParams& p, std::size_t order) {
  switch (op) {
    case MeixnerOp::U: return pmd_U(p, order);
    case MeixnerOp::V: return pmd_V(p, order);
    case MeixnerOp::N: return pmd_number(p, order);
    case MeixnerOp::a0: return pmd_a0(p, order);
    case MeixnerOp::aminus: return pmd_aminus(p, order);
    case MeixnerOp::aplus: return pmd_aplus(p, order);
  }
  throw std::logic_error("unreachable");
}

int faithfulness(MeixnerOp op) {
  switch (op) {
    case MeixnerOp::aminus: return -1;
    case MeixnerOp::V:
    case MeixnerOp::aplus: return 1;
    default: return 0;
  }
}

GradedOp operator_matrix(MeixnerOp op, const SzegoJacobi& sj, std::size_t N) {
  const QuantumOps q = quantum_ops(sj, N);
  switch (op) {
    case MeixnerOp::U: return semi_ops(q).U;
    case MeixnerOp::V: return semi_ops(q).V;
    case MeixnerOp::N: return number_op(N, sj.closed_at(N));
    case MeixnerOp::a0: return q.azero;
    case MeixnerOp::aminus: return q.aminus;
    case MeixnerOp::aplus: return q.aplus;
  }
  throw std::logic_error("unreachable");
}

namespace {

VerifyReport compare_pmd(std::string name, const PMDecomp& lhs, const PMDecomp& rhs, long max_order) {
  VerifyReport r;
  r.identity = std::move(name);
  r.max_checked_degree = max_order;
  for (long n = 0; n <= max_order; ++n) {
    const auto nn = static_cast<std::size_t>(n);
    const Poly diff = lhs.coefficient(nn) - rhs.coefficient(nn);
    if (diff.is_zero()) continue;
    r.pass = false;
    r.first_failure = nn;
    r.residual = diff;
    break;
  }
  return r;
}

}  // namespace

VerifyReport check_closed_form(MeixnerOp op, const MeixnerParams& p, std::size_t N, std::size_t order) {
  const SzegoJacobi sj = szego_jacobi(p);
  const std::size_t n_eff = effective_truncation(sj, N);
  const GradedOp A = operator_matrix(op, sj, n_eff);
  const MonomialOp M = to_monomial_basis(A, sj);
  // A closed truncation represents degree-raising operators only modulo the
  // vanishing polynomial f_{N+1}; as polynomial operators the top column is lost.
  const long polynomial_valid = static_cast<long>(n_eff) - std::max(faithfulness(op), 0);
  const long limit = std::min({static_cast<long>(order), M.valid_degree, polynomial_valid});
  const std::string name = "extract_pmd(" + to_string(op) + ") = closed form";
  if (limit < 0) return VerifyReport{name, true, -1, std::nullopt, std::nullopt};
  const PMDecomp extracted = extract_pmd(M.entries, faithfulness(op), static_cast<std::size_t>(limit));
  return compare_pmd(name, extracted, closed_form(op, p, static_cast<std::size_t>(limit)), limit);
}

VerifyReport one_meixner_limit_check(const MeixnerParams& p0, std::size_t order) {
  const MeixnerDerived d = derived(p0);
  if (d.Delta != 0) throw std::invalid_argument("one_meixner_limit_check needs alpha^2 == 4 beta");
  const PMDecomp U = pmd_U(p0, order);
  const PMDecomp expected(0, {Poly::constant(p0.alpha0 / 2), Rat(1, 2) * Poly::linear(p0.alpha, d.tau)});
  VerifyReport r = compare_pmd("U = alpha0/2 + (alpha X + tau) D / 2", U, expected.truncated(order),
                               static_cast<long>(order));
  if (r.pass && U.coeffs.size() > 2) {
    r.pass = false;
    r.first_failure = 2;
    r.residual = U.coeffs[2];
  }
  return r;
}

VerifyReport double_commutator_check(const MeixnerParams& p, std::size_t N) {
  const SzegoJacobi sj = szego_jacobi(p);
  const std::size_t n_eff = effective_truncation(sj, N);
  const bool closed = sj.closed_at(n_eff);
  const QuantumOps q = quantum_ops(sj, n_eff);
  const SemiOps s = semi_ops(q);
  const GradedOp X = position_op(q);
  const GradedOp lhs = commutator(commutator(s.U, X), X);
  const GradedOp rhs = Rat(-derived(p).Delta / 2) * (X - Rat(2) * s.U);
  const long deg = closed ? static_cast<long>(n_eff) : static_cast<long>(n_eff) - 3;
  const std::vector<Poly> basis = monic_polys(sj, n_eff);
  return compare_ops("[[U,X],X] = -(Delta/2)(X - 2U)", lhs, rhs, deg, &basis);
}

VerifyReport comm_UX_check(const MeixnerParams& p, std::size_t N) {
  const SzegoJacobi sj = szego_jacobi(p);
  const std::size_t n_eff = effective_truncation(sj, N);
  const bool closed = sj.closed_at(n_eff);
  const QuantumOps q = quantum_ops(sj, n_eff);
  const GradedOp lhs = commutator(semi_ops(q).U, position_op(q));
  const long deg = closed ? static_cast<long>(n_eff) : static_cast<long>(n_eff) - 2;
  const std::vector<Poly> basis = monic_polys(sj, n_eff);
  return compare_ops("[U,X] = (alpha/2)X - (Delta/2)N + (tau/2)I", lhs, comm_UX_closed_form(p, n_eff), deg, &basis);
}

}  // namespace meixner
