#include "meixner/operator_algebra.hpp"

#include "meixner/errors.hpp"

#include <algorithm>

namespace meixner {

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

Matrix<Rat> zero_matrix(std::size_t N) { return Matrix<Rat>::Zero(idx(N + 1), idx(N + 1)); }

}  // namespace

QuantumOps quantum_ops(const SzegoJacobi& sj, std::size_t N) {
  if (sj.support_bound && N >= *sj.support_bound) {
    throw TruncationBeyondSupport("truncation " + std::to_string(N) + " exceeds the support bound " +
                                  std::to_string(*sj.support_bound));
  }
  const bool closed = sj.closed_at(N);
  Matrix<Rat> up = zero_matrix(N), diag = zero_matrix(N), down = zero_matrix(N);
  for (std::size_t n = 0; n <= N; ++n) {
    if (n < N) up(idx(n + 1), idx(n)) = 1;
    diag(idx(n), idx(n)) = sj.alpha(n);
    if (n >= 1) down(idx(n - 1), idx(n)) = sj.omega(n);
  }
  return QuantumOps{GradedOp(std::move(up), Band{1, 1}, closed ? 0 : 1, closed),
                    GradedOp(std::move(diag), Band{0, 0}, 0, closed),
                    GradedOp(std::move(down), Band{-1, -1}, 0, closed)};
}

SemiOps semi_ops(const QuantumOps& q) {
  const Rat half(1, 2);
  return SemiOps{q.aminus + half * q.azero, q.aplus + half * q.azero};
}

GradedOp number_op(std::size_t N, bool closed) {
  Matrix<Rat> m = zero_matrix(N);
  for (std::size_t n = 0; n <= N; ++n) m(idx(n), idx(n)) = static_cast<long>(n);
  return GradedOp(std::move(m), Band{0, 0}, 0, closed);
}

GradedOp identity_op(std::size_t N, bool closed) {
  return GradedOp(Matrix<Rat>::Identity(idx(N + 1), idx(N + 1)), Band{0, 0}, 0, closed);
}

GradedOp position_op(const QuantumOps& q) { return q.aplus + q.azero + q.aminus; }

std::size_t effective_truncation(const SzegoJacobi& sj, std::size_t N) {
  if (sj.support_bound && *sj.support_bound >= 1) return std::min(N, *sj.support_bound - 1);
  return N;
}

VerifyReport compare_ops(std::string name, const GradedOp& lhs, const GradedOp& rhs, long max_degree,
                         const std::vector<Poly>* basis) {
  if (lhs.truncation() != rhs.truncation()) throw std::invalid_argument("compare_ops: truncation mismatch");
  VerifyReport report;
  report.identity = std::move(name);
  const long limit = std::min({max_degree, lhs.valid_degree(), rhs.valid_degree()});
  report.max_checked_degree = limit;
  const Matrix<Rat> diff = lhs.entries() - rhs.entries();
  for (long n = 0; n <= limit; ++n) {
    const auto col = diff.col(n);
    if (exactly_zero(col)) continue;
    report.pass = false;
    report.first_failure = static_cast<std::size_t>(n);
    Poly residual;
    for (Eigen::Index m = 0; m < col.size(); ++m) {
      if (col(m) == 0) continue;
      const auto mm = static_cast<std::size_t>(m);
      residual += (basis && mm < basis->size()) ? col(m) * (*basis)[mm] : Poly::monomial(mm, col(m));
    }
    report.residual = std::move(residual);
    break;
  }
  return report;
}

std::vector<VerifyReport> verify_universal(const SzegoJacobi& sj, std::size_t N) {
  const bool closed = sj.closed_at(N);
  if (!closed && N < 4) throw std::invalid_argument("verify_universal needs N >= 4 on an open truncation");
  const QuantumOps q = quantum_ops(sj, N);
  const SemiOps s = semi_ops(q);
  const GradedOp Num = number_op(N, closed);
  const GradedOp X = position_op(q);
  const GradedOp zero(zero_matrix(N), Band{0, 0}, 0, closed);
  const std::vector<Poly> basis = monic_polys(sj, N);
  const long deg = closed ? static_cast<long>(N) : static_cast<long>(N) - 2;

  std::vector<VerifyReport> out;
  out.push_back(compare_ops("[N,a+] = a+", commutator(Num, q.aplus), q.aplus, deg, &basis));
  out.push_back(compare_ops("[N,a0] = 0", commutator(Num, q.azero), zero, deg, &basis));
  out.push_back(compare_ops("[a-,N] = a-", commutator(q.aminus, Num), q.aminus, deg, &basis));
  out.push_back(compare_ops("[N,V] = a+", commutator(Num, s.V), q.aplus, deg, &basis));
  out.push_back(compare_ops("[U,N] = a-", commutator(s.U, Num), q.aminus, deg, &basis));

  const GradedOp NX = commutator(Num, X);
  VerifyReport last = compare_ops("[N,X] = V - U = a+ - a-", NX, s.V - s.U, deg, &basis);
  if (last.pass) {
    VerifyReport second = compare_ops(last.identity, NX, q.aplus - q.aminus, deg, &basis);
    if (!second.pass) last = std::move(second);
  }
  out.push_back(std::move(last));
  return out;
}

Matrix<Rat> change_of_basis(const std::vector<Poly>& f) {
  const std::size_t n = f.size();
  Matrix<Rat> C = Matrix<Rat>::Zero(idx(n), idx(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < f[j].size() && i < n; ++i) C(idx(i), idx(j)) = f[j].coeff(i);
  return C;
}

MonomialOp to_monomial_basis(const GradedOp& A, const SzegoJacobi& sj) {
  const std::size_t N = A.truncation();
  const Matrix<Rat> C = change_of_basis(monic_polys(sj, N));
  const Matrix<Rat> Cinv = C.triangularView<Eigen::UnitUpper>().solve(Matrix<Rat>::Identity(idx(N + 1), idx(N + 1)));
  return MonomialOp{C * A.entries() * Cinv, A.valid_degree()};
}

}  // namespace meixner
