#include "meixner/pmd.hpp"

#include "meixner/errors.hpp"

#include <algorithm>

namespace meixner {

void PMDecomp::trim() {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

PMDecomp PMDecomp::truncated(std::size_t order) const {
  std::vector<Poly> c(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(std::min(order + 1, coeffs.size())));
  return PMDecomp(k, std::move(c));
}

std::size_t PMDecomp::nonzero_terms() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs.begin(), coeffs.end(), [](const Poly& p) { return !p.is_zero(); }));
}

PMDecomp operator+(const PMDecomp& a, const PMDecomp& b) {
  std::vector<Poly> c(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = a.coefficient(n) + b.coefficient(n);
  return PMDecomp(std::max(a.k, b.k), std::move(c));
}

PMDecomp operator-(const PMDecomp& a, const PMDecomp& b) {
  std::vector<Poly> c(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = a.coefficient(n) - b.coefficient(n);
  return PMDecomp(std::max(a.k, b.k), std::move(c));
}

PMDecomp operator*(const Rat& s, const PMDecomp& a) {
  std::vector<Poly> c;
  c.reserve(a.coeffs.size());
  for (const auto& p : a.coeffs) c.push_back(s * p);
  return PMDecomp(a.k, std::move(c));
}

PMDecomp multiplication(const Poly& p) { return PMDecomp(std::max(p.degree(), 0), {p}); }

PMDecomp extract_pmd(const Matrix<Rat>& T, int k, std::size_t N) {
  if (T.cols() < static_cast<Eigen::Index>(N + 1)) {
    throw std::invalid_argument("extract_pmd: matrix has fewer than N + 1 columns");
  }
  std::vector<Poly> A;
  A.reserve(N + 1);
  for (std::size_t m = 0; m <= N; ++m) {
    const auto col = T.col(static_cast<Eigen::Index>(m));
    std::vector<Rat> image(static_cast<std::size_t>(col.size()));
    for (Eigen::Index i = 0; i < col.size(); ++i) image[static_cast<std::size_t>(i)] = col(i);
    Poly residual(std::move(image));
    if (residual.degree() > static_cast<int>(m) + k) {
      throw NotFaithful("T X^" + std::to_string(m) + " has degree " + std::to_string(residual.degree()) +
                        " > m + k = " + std::to_string(static_cast<int>(m) + k));
    }
    // Remove the contributions of A_0..A_{m-1}; what is left is m! A_m.
    Rat falling = 1;  // m!/(m-n)!
    for (std::size_t n = 0; n < m; ++n) {
      if (n > 0) falling *= static_cast<long>(m - n + 1);
      residual -= falling * A[n] * Poly::monomial(m - n);
    }
    A.push_back(residual * (Rat(1) / factorial(m)));
    if (A.back().degree() > static_cast<int>(m) + k) {
      throw NotFaithful("coefficient A_" + std::to_string(m) + " violates deg A_n <= n + k");
    }
  }
  return PMDecomp(k, std::move(A));
}

Poly apply_pmd(const PMDecomp& p, const Poly& f) {
  Poly out;
  Poly df = f;
  for (std::size_t n = 0; n < p.coeffs.size() && !df.is_zero(); ++n) {
    if (n > 0) df = derivative(df);
    out += p.coeffs[n] * df;
  }
  return out;
}

Matrix<Rat> pmd_matrix(const PMDecomp& p, std::size_t N) {
  std::vector<Poly> images;
  std::size_t rows = N + 1;
  for (std::size_t m = 0; m <= N; ++m) {
    images.push_back(apply_pmd(p, Poly::monomial(m)));
    rows = std::max(rows, images.back().size());
  }
  Matrix<Rat> T = Matrix<Rat>::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(N + 1));
  for (std::size_t m = 0; m <= N; ++m)
    for (std::size_t i = 0; i < images[m].size(); ++i)
      T(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(m)) = images[m].coeff(i);
  return T;
}

XDWord parse_word(const std::string& text) {
  XDWord w;
  for (char ch : text) {
    if (ch == 'X' || ch == 'x') w.push_back(Letter::X);
    else if (ch == 'D' || ch == 'd') w.push_back(Letter::D);
    else throw std::invalid_argument(std::string("unexpected letter '") + ch + "' in X/D word");
  }
  return w;
}

PMDecomp normal_order(const XDWord& word) {
  // Right-multiply the running normal form by each letter:
  //   (sum A_n D^n) X = sum (X A_n) D^n + n A_n D^{n-1}
  //   (sum A_n D^n) D = sum A_n D^{n+1}
  std::vector<Poly> A{Poly::constant(1)};
  int k = 0;
  for (Letter letter : word) {
    if (letter == Letter::D) {
      A.insert(A.begin(), Poly{});
      --k;
      continue;
    }
    std::vector<Poly> next(A.size());
    for (std::size_t n = 0; n < A.size(); ++n) {
      next[n] += Poly::x() * A[n];
      if (n > 0) next[n - 1] += Rat(static_cast<long>(n)) * A[n];
    }
    A = std::move(next);
    ++k;
  }
  return PMDecomp(k, std::move(A));
}

Poly apply_word(const XDWord& word, const Poly& f) {
  Poly g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = (*it == Letter::X) ? Poly::x() * g : derivative(g);
  return g;
}

}  // namespace meixner
