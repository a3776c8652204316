#include "meixner/orthopoly.hpp"

#include "meixner/errors.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>

namespace meixner {

SzegoJacobi SzegoJacobi::from_tables(std::vector<Rat> alpha, std::vector<Rat> omega,
                                     std::optional<std::size_t> support_bound) {
  auto a = std::make_shared<const std::vector<Rat>>(std::move(alpha));
  auto w = std::make_shared<const std::vector<Rat>>(std::move(omega));
  SzegoJacobi sj;
  sj.alpha = [a](std::size_t n) -> Rat {
    if (n >= a->size()) throw std::out_of_range("alpha_" + std::to_string(n) + " not tabulated");
    return (*a)[n];
  };
  sj.omega = [w](std::size_t n) -> Rat {
    if (n == 0 || n >= w->size()) throw std::out_of_range("omega_" + std::to_string(n) + " not tabulated");
    return (*w)[n];
  };
  sj.support_bound = support_bound;
  return sj;
}

std::size_t SzegoJacobi::dimension(std::size_t cap) const {
  return support_bound ? std::min(*support_bound, cap) : cap;
}

std::vector<Poly> monic_polys(const SzegoJacobi& sj, std::size_t N) {
  if (sj.support_bound && N >= *sj.support_bound) {
    throw TruncationBeyondSupport("degree " + std::to_string(N) + " requested but the chaos terminates at " +
                                  std::to_string(*sj.support_bound));
  }
  std::vector<Poly> f;
  f.reserve(N + 1);
  f.push_back(Poly::constant(1));
  if (N == 0) return f;
  f.push_back(Poly::linear(1, -sj.alpha(0)));
  for (std::size_t n = 1; n < N; ++n) {
    f.push_back(Poly::x() * f[n] - sj.alpha(n) * f[n] - sj.omega(n) * f[n - 1]);
  }
  return f;
}

Matrix<Rat> jacobi_matrix(const SzegoJacobi& sj, std::size_t n) {
  Matrix<Rat> J = Matrix<Rat>::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    J(jj, jj) = sj.alpha(j);
    if (j + 1 < n) J(jj + 1, jj) = 1;
    if (j >= 1) J(jj - 1, jj) = sj.omega(j);
  }
  return J;
}

MomentSeq moments_from_sj(const SzegoJacobi& sj, std::size_t M) {
  const std::size_t n = sj.dimension(M + 1);
  const Matrix<Rat> J = jacobi_matrix(sj, n);
  Vector<Rat> v = Vector<Rat>::Zero(static_cast<Eigen::Index>(n));
  v(0) = 1;
  MomentSeq mu;
  mu.moments.reserve(M + 1);
  for (std::size_t m = 0; m <= M; ++m) {
    mu.moments.push_back(v(0));
    if (m < M) v = J * v;
  }
  return mu;
}

Rat moment_functional(const MomentSeq& mu, const Poly& f) {
  if (f.size() > mu.size()) {
    throw std::out_of_range("polynomial of degree " + std::to_string(f.degree()) + " needs more moments");
  }
  Rat acc = 0;
  for (std::size_t i = 0; i < f.size(); ++i) acc += f.coeffs()[i] * mu[i];
  return acc;
}

MomentSeq shift_moments(const MomentSeq& mu, const Rat& c) {
  MomentSeq out;
  out.moments.resize(mu.size());
  for (std::size_t m = 0; m < mu.size(); ++m) {
    Rat acc = 0;
    for (std::size_t j = 0; j <= m; ++j) acc += binomial(m, j) * ipow(c, m - j) * mu[j];
    out.moments[m] = acc;
  }
  return out;
}

SzegoJacobi GramSchmidtResult::szego_jacobi() const {
  return SzegoJacobi::from_tables(alpha, omega, support_bound);
}

GramSchmidtResult gram_schmidt_from_moments(const MomentSeq& mu, std::size_t N) {
  if (mu.size() < 2 * N + 1) {
    throw InvalidMoments("orthogonalizing up to degree " + std::to_string(N) + " needs " +
                         std::to_string(2 * N + 1) + " moments, got " + std::to_string(mu.size()));
  }
  if (mu[0] != 1) throw InvalidMoments("moments[0] must be 1, got " + to_string(mu[0]));

  GramSchmidtResult out;
  std::vector<Rat> norms{Rat(1)};
  out.polys.push_back(Poly::constant(1));

  for (std::size_t n = 1; n <= N; ++n) {
    const Poly xn = Poly::monomial(n);
    Poly f = xn;
    for (std::size_t k = 0; k < n; ++k) {
      f -= (moment_functional(mu, xn * out.polys[k]) / norms[k]) * out.polys[k];
    }
    out.polys.push_back(f);
    const Rat h = moment_functional(mu, f * f);
    if (h < 0) {
      throw InvalidMoments("negative norm for the degree-" + std::to_string(n) + " orthogonal polynomial");
    }
    norms.push_back(h);
    if (h == 0) {
      out.support_bound = n;
      break;
    }
  }

  out.omega.assign(1, Rat(0));
  for (std::size_t n = 1; n < norms.size(); ++n) out.omega.push_back(norms[n] / norms[n - 1]);

  for (std::size_t n = 0; n < out.polys.size(); ++n) {
    if (norms[n] == 0 || 2 * n + 1 >= mu.size()) break;
    const Poly& f = out.polys[n];
    out.alpha.push_back(moment_functional(mu, Poly::x() * f * f) / norms[n]);
  }
  return out;
}

Rat determinant(Matrix<Rat> m) {
  const Eigen::Index n = m.rows();
  Rat det = 1;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Rat factor = m(r, col) / m(col, col);
      for (Eigen::Index c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

HankelStatus hankel_check(const MomentSeq& mu, std::size_t k) {
  if (mu.size() == 0 || 2 * k > mu.size() - 1) {
    throw std::out_of_range("hankel_check of order " + std::to_string(k) + " needs " + std::to_string(2 * k + 1) +
                            " moments");
  }
  std::optional<std::size_t> first_zero;
  for (std::size_t j = 0; j <= k; ++j) {
    const auto size = static_cast<Eigen::Index>(j + 1);
    Matrix<Rat> H(size, size);
    for (Eigen::Index r = 0; r < size; ++r)
      for (Eigen::Index c = 0; c < size; ++c) H(r, c) = mu[static_cast<std::size_t>(r + c)];
    const Rat d = determinant(H);
    if (d < 0 || (first_zero && d != 0)) return {HankelStatus::Kind::invalid, j};
    if (d == 0 && !first_zero) first_zero = j;
  }
  if (first_zero) return {HankelStatus::Kind::degenerate, *first_zero};
  return {HankelStatus::Kind::positive, 0};
}

}  // namespace meixner
